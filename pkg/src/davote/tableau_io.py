"""File formats for tableaux and recognition reports.

Two-voter tableaux travel as JSON objects with fields `kind`
("correspondence" or "form"), `candidates` (display names, defining the
internal index order) and `cells` (row-major; correspondence cells are
index-sorted arrays of names, form cells single names).  A plain-text
alternative holds one row per line with whitespace-separated cells:
bare names for forms, brace lists like ``{a,b}`` for correspondences.
Text files carry no candidate list, so names map to indices by first
appearance in row-major order.

The n-voter two-candidate tableau is JSON only: `weights` per voter,
explicit `dims` (each weight + 1) and flat row-major `cells` written as
"a", "b" or "ab".  The presence of `weights` is what distinguishes it
from the two-voter layout.

A candidate listed in a file but absent from every cell is kept: the
matrix then cannot be a distributed approval tableau for that candidate
count and recognition will reject it, which is the honest answer.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import (
    Correspondence,
    Form,
    Labeling,
    ParameterError,
    PlaneLabeling,
    default_names,
)
from .plurality import ForbiddenWitness
from .results import RecognitionResult
from .special import NTableau

__all__ = [
    "dumps_tableau",
    "loads_tableau",
    "save_tableau",
    "load_tableau",
    "result_to_dict",
    "dumps_result",
]

_N_NAMES = ("a", "b")


def _checked_names(t, names: list[str] | None) -> list[str]:
    p = 2 if isinstance(t, NTableau) else t.candidates
    if names is None:
        return default_names(p)
    if len(names) != p:
        raise ParameterError(f"need {p} candidate names, got {len(names)}")
    if len(set(names)) != p:
        raise ParameterError("candidate names must be unique")
    return list(names)


def _to_dict(t, names: list[str]) -> dict:
    if isinstance(t, NTableau):
        if t.kind == "correspondence":
            cells = ["".join(_N_NAMES[c] for c in sorted(cell)) for cell in t.cells]
        else:
            cells = [_N_NAMES[cell] for cell in t.cells]
        return {
            "kind": t.kind,
            "weights": list(t.weights),
            "dims": list(t.dims),
            "candidates": list(_N_NAMES),
            "cells": cells,
        }
    if isinstance(t, Correspondence):
        kind = "correspondence"
        cells = [[[names[c] for c in sorted(cell)] for cell in row] for row in t.cells]
    else:
        kind = "form"
        cells = [[names[c] for c in row] for row in t.cells]
    return {"kind": kind, "candidates": names, "cells": cells}


def _to_text(t, names: list[str]) -> str:
    if isinstance(t, NTableau):
        raise ParameterError("n-voter tableaux have no text format, use JSON")
    if t.candidates > 26:
        raise ParameterError("text format supports at most 26 candidates")
    bad = [n for n in names if any(ch in n for ch in " \t{},")]
    if bad:
        raise ParameterError(f"name {bad[0]!r} cannot appear in the text format")
    lines = []
    for row in t.cells:
        if isinstance(t, Correspondence):
            toks = ["{" + ",".join(names[c] for c in sorted(cell)) + "}" for cell in row]
        else:
            toks = [names[c] for c in row]
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def _format_json(obj: dict) -> str:
    # Hand-rolled layout: one top-level key per line, and each matrix row
    # of "cells" on its own line, so a dumped tableau reads like a matrix.
    parts = []
    for key, val in obj.items():
        if key == "cells" and isinstance(val, list) and val and isinstance(val[0], list):
            rows = ",\n  ".join(json.dumps(r) for r in val)
            parts.append(f' "cells": [\n  {rows}\n ]')
        else:
            parts.append(f" {json.dumps(key)}: {json.dumps(val)}")
    return "{\n" + ",\n".join(parts) + "\n}"


def dumps_tableau(t, names: list[str] | None = None, fmt: str = "json") -> str:
    """Serialize a tableau; `names` defaults to a, b, c, ..."""
    names = _checked_names(t, names)
    if fmt == "json":
        return _format_json(_to_dict(t, names))
    if fmt == "text":
        return _to_text(t, names)
    raise ParameterError(f"unknown format {fmt!r}, expected 'json' or 'text'")


def _index_map(names: list) -> dict[str, int]:
    if (
        not isinstance(names, list)
        or not names
        or not all(isinstance(n, str) and n for n in names)
    ):
        raise ParameterError("'candidates' must be a list of non-empty strings")
    if len(set(names)) != len(names):
        raise ParameterError("candidate names must be unique")
    return {n: i for i, n in enumerate(names)}


def _from_json(data: dict):
    if not isinstance(data, dict):
        raise ParameterError("top-level JSON value must be an object")
    if "weights" in data:
        return _n_tableau_from_json(data)
    kind = data.get("kind")
    if kind not in ("correspondence", "form"):
        raise ParameterError(f"unknown tableau kind {kind!r}")
    names = data.get("candidates")
    idx = _index_map(names)
    rows = data.get("cells")
    if not isinstance(rows, list) or not rows:
        raise ParameterError("'cells' must be a non-empty list of rows")

    def one(name) -> int:
        if name not in idx:
            raise ParameterError(f"cell name {name!r} not in the candidates list")
        return idx[name]

    if kind == "correspondence":
        cells = tuple(
            tuple(frozenset(one(n) for n in cell) for cell in row) for row in rows
        )
        return Correspondence(candidates=len(names), cells=cells), list(names)
    cells = tuple(tuple(one(n) for n in row) for row in rows)
    return Form(candidates=len(names), cells=cells), list(names)


def _n_tableau_from_json(data: dict):
    kind = data.get("kind", "correspondence")
    if not all(isinstance(w, int) for w in data["weights"]):
        raise ParameterError("'weights' must be integers")
    weights = tuple(data["weights"])
    if "dims" in data and list(data["dims"]) != [w + 1 for w in weights]:
        raise ParameterError("'dims' disagree with 'weights'")
    raw = data.get("cells")
    if not isinstance(raw, list):
        raise ParameterError("'cells' must be a flat list")
    cells = []
    for tok in raw:
        if not isinstance(tok, str):
            raise ParameterError(f"bad two-candidate cell {tok!r}")
        members = frozenset(_N_NAMES.index(ch) for ch in tok if ch in _N_NAMES)
        if not members or len(tok) != len(members):
            raise ParameterError(f"bad two-candidate cell {tok!r}")
        if kind == "form":
            if len(members) != 1:
                raise ParameterError(f"form cell {tok!r} must name one candidate")
            cells.append(next(iter(members)))
        else:
            cells.append(members)
    return NTableau(weights=weights, kind=kind, cells=tuple(cells)), list(_N_NAMES)


def _from_text(text: str):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())
    if not rows:
        raise ParameterError("no rows found in text input")
    is_corr = any("{" in tok for row in rows for tok in row)
    names: list[str] = []
    index: dict[str, int] = {}

    def one(name: str) -> int:
        if not name:
            raise ParameterError("empty candidate name in text input")
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    if is_corr:
        cells = tuple(
            tuple(
                frozenset(one(n) for n in tok.strip("{}").split(","))
                for tok in row
            )
            for row in rows
        )
    else:
        cells = tuple(tuple(one(tok) for tok in row) for row in rows)
    # p is taken to be the number of distinct names observed; a candidate
    # that never wins a cell is unknowable from a text matrix.
    if is_corr:
        return Correspondence(candidates=len(names), cells=cells), names
    return Form(candidates=len(names), cells=cells), names


def loads_tableau(text: str):
    """Parse JSON or plain-text input; returns (tableau, names).

    `names[i]` is the display name of internal candidate i.  Input
    starting with ``{`` is tried as JSON first; if it does not decode it
    is re-read as text, since a brace there may just be a set-valued
    cell like ``{a,b}``.
    """
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            return _from_text(text)
        return _from_json(data)
    return _from_text(text)


def save_tableau(t, path, names: list[str] | None = None, fmt: str = "json") -> None:
    Path(path).write_text(dumps_tableau(t, names, fmt))


def load_tableau(path):
    """Read a tableau file; returns (tableau, names)."""
    return loads_tableau(Path(path).read_text())


def _witness_to_json(witness, names: list[str] | None):
    if witness is None:
        return None
    if isinstance(witness, ForbiddenWitness):
        sym = {
            k: (names[v] if names else v) for k, v in sorted(witness.symbols.items())
        }
        return {
            "pattern": witness.pattern,
            "rows": list(witness.rows),
            "cols": list(witness.cols),
            "symbols": sym,
            "description": witness.describe(names),
        }
    return str(witness)


def result_to_dict(res: RecognitionResult, names: list[str] | None = None) -> dict:
    """JSON-ready view of a recognition result.

    Strategy labels are card-count vectors in the order of `candidates`;
    the n-voter case reports per-axis plane values instead.
    """
    out: dict = {"verdict": res.verdict, "method": res.method}
    if names is not None:
        out["candidates"] = list(names)
    lab = res.labeling
    if isinstance(lab, Labeling):
        out["row_labels"] = [list(x) for x in lab.row_labels]
        out["col_labels"] = [list(y) for y in lab.col_labels]
    elif isinstance(lab, PlaneLabeling):
        out["axis_labels"] = [list(a) for a in lab.axis_labels]
    else:
        out["row_labels"] = None
        out["col_labels"] = None
    out["witness"] = _witness_to_json(res.witness, names)
    return out


def dumps_result(res: RecognitionResult, names: list[str] | None = None) -> str:
    return _format_json(result_to_dict(res, names))
