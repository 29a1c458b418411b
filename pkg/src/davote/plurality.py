"""Recognition of single-card (plurality) voting forms.

With both voters holding one card, strategies are unit vectors, the
tableau is p x p, and a form is a distributed approval form exactly
when rows and columns can be labeled with two permutations of the
candidates such that every cell equals its row label or its column
label (and equals both where the labels coincide).

Equivalently, the form is valid iff it embeds none of three forbidden
patterns, taken up to row and column permutations:

* m1: a 2x2 submatrix with one diagonal equal to some candidate a and
  both remaining entries different from a;
* m2: a 2x2 submatrix with all four entries equal;
* m3: four cells in one line (row or column) covering two candidates
  twice each.

The greedy assignment labels a line with a candidate occurring at least
twice in it; on pattern-free forms it extends uniquely (up to the
arbitrary completion of untouched lines) to a full labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Candidate, Form, Labeling, labeling_generates
from .results import ACCEPTED, REJECTED, RecognitionResult

__all__ = [
    "ForbiddenWitness",
    "PartialAssignment",
    "find_forbidden_submatrix",
    "greedy_assignment",
    "recognize_plurality_form",
]

PATTERN_ORDER = ("m2", "m1", "m3")


@dataclass(frozen=True)
class ForbiddenWitness:
    """Concrete embedding of one forbidden pattern.

    Reading the input at `rows` x `cols`, in the order given, reproduces
    the pattern: m2 and m1 use two rows and two columns (m1 rows may be
    listed high-before-low when the equal pair sits on the anti
    diagonal); m3 uses a single row with four columns or a single column
    with four rows.  `symbols` maps the pattern's placeholder letters to
    the candidates playing them.
    """

    pattern: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    symbols: dict[str, Candidate]

    def describe(self, names: list[str] | None = None) -> str:
        def nm(c: Candidate) -> str:
            return names[c] if names else str(c)

        syms = ", ".join(f"{k}={nm(v)}" for k, v in sorted(self.symbols.items()))
        return f"{self.pattern} at rows {self.rows}, cols {self.cols} with {syms}"


@dataclass(frozen=True)
class PartialAssignment:
    """Labels forced by double occurrences, one set per line.

    On pattern-free forms every set has at most one member; multi-member
    sets only arise together with a forbidden pattern.
    """

    row_labels: tuple[frozenset[Candidate], ...]
    col_labels: tuple[frozenset[Candidate], ...]


def _find_m2(cells) -> ForbiddenWitness | None:
    n_rows, n_cols = len(cells), len(cells[0])
    for i1 in range(n_rows):
        for i2 in range(i1 + 1, n_rows):
            shared: dict[Candidate, list[int]] = {}
            for j in range(n_cols):
                if cells[i1][j] == cells[i2][j]:
                    shared.setdefault(cells[i1][j], []).append(j)
            best = None
            for v, js in shared.items():
                if len(js) >= 2 and (best is None or (js[0], js[1]) < best[:2]):
                    best = (js[0], js[1], v)
            if best is not None:
                j1, j2, v = best
                return ForbiddenWitness("m2", (i1, i2), (j1, j2), {"a": v})
    return None


def _find_m1(cells) -> ForbiddenWitness | None:
    n_rows, n_cols = len(cells), len(cells[0])
    for i1 in range(n_rows):
        for i2 in range(i1 + 1, n_rows):
            r1, r2 = cells[i1], cells[i2]
            for j1 in range(n_cols):
                for j2 in range(j1 + 1, n_cols):
                    v = r1[j1]
                    if r2[j2] == v and r1[j2] != v and r2[j1] != v:
                        return ForbiddenWitness(
                            "m1", (i1, i2), (j1, j2),
                            {"a": v, "b": r1[j2], "c": r2[j1]},
                        )
                    v = r1[j2]
                    if r2[j1] == v and r1[j1] != v and r2[j2] != v:
                        # Equal pair on the anti diagonal; listing the
                        # high row first makes the read match m1.
                        return ForbiddenWitness(
                            "m1", (i2, i1), (j1, j2),
                            {"a": v, "b": r2[j2], "c": r1[j1]},
                        )
    return None


def _m3_in_line(line) -> tuple[tuple[int, ...], Candidate, Candidate] | None:
    positions: dict[Candidate, list[int]] = {}
    for t, v in enumerate(line):
        positions.setdefault(v, []).append(t)
    doubled = [v for v, ts in positions.items() if len(ts) >= 2]
    if len(doubled) < 2:
        return None
    best = None
    for u, v in combinations(doubled, 2):
        tu, tv = positions[u][:2], positions[v][:2]
        if tu[0] > tv[0]:
            u, v, tu, tv = v, u, tv, tu
        key = sorted(tu + tv)
        if best is None or key < best[0]:
            best = (key, tuple(tu + tv), u, v)
    return best[1], best[2], best[3]


def _find_m3(cells) -> ForbiddenWitness | None:
    n_rows, n_cols = len(cells), len(cells[0])
    for i in range(n_rows):
        hit = _m3_in_line(cells[i])
        if hit:
            ts, u, v = hit
            return ForbiddenWitness("m3", (i,), ts, {"a": u, "b": v})
    for j in range(n_cols):
        hit = _m3_in_line([cells[i][j] for i in range(n_rows)])
        if hit:
            ts, u, v = hit
            return ForbiddenWitness("m3", ts, (j,), {"a": u, "b": v})
    return None


_FINDERS = {"m1": _find_m1, "m2": _find_m2, "m3": _find_m3}


def find_forbidden_submatrix(
    g: Form, patterns: tuple[str, ...] = PATTERN_ORDER
) -> ForbiddenWitness | None:
    """First forbidden pattern embedded in `g`, or None.

    Patterns are tried in the given order; within one pattern the
    witness is the lexicographically least embedding (row indices, then
    column indices, equal-diagonal orientation first).
    """
    for name in patterns:
        if name not in _FINDERS:
            raise ValueError(f"unknown pattern {name!r}")
        hit = _FINDERS[name](g.cells)
        if hit:
            return hit
    return None


def greedy_assignment(g: Form) -> PartialAssignment:
    """Label every line with the candidates it repeats."""

    def doubled(line) -> frozenset[Candidate]:
        seen: set[Candidate] = set()
        out: set[Candidate] = set()
        for v in line:
            if v in seen:
                out.add(v)
            seen.add(v)
        return frozenset(out)

    rows = tuple(doubled(row) for row in g.cells)
    cols = tuple(
        doubled([g.cells[i][j] for i in range(g.rows)]) for j in range(g.cols)
    )
    return PartialAssignment(rows, cols)


def recognize_plurality_form(g: Form) -> RecognitionResult:
    """Decide whether a p x p single-card form is distributed approval.

    Accepts iff the greedy assignment extends to two full candidate
    permutations regenerating the input; in that case the labeling (as
    unit-vector strategies) is returned.  Otherwise the input embeds a
    forbidden pattern, and the witness reports one.
    """
    p = g.candidates

    def rejection() -> RecognitionResult:
        return RecognitionResult(
            REJECTED, "plurality", witness=find_forbidden_submatrix(g)
        )

    if g.rows != g.cols or g.rows != p:
        return RecognitionResult(
            REJECTED,
            "plurality",
            witness=f"single-card tableau must be {p} x {p}, got {g.rows} x {g.cols}",
        )

    ga = greedy_assignment(g)
    if any(len(s) > 1 for s in ga.row_labels + ga.col_labels):
        return rejection()
    row_label = [next(iter(s)) if s else None for s in ga.row_labels]
    col_label = [next(iter(s)) if s else None for s in ga.col_labels]
    used_rows = [v for v in row_label if v is not None]
    used_cols = [v for v in col_label if v is not None]
    if len(set(used_rows)) != len(used_rows) or len(set(used_cols)) != len(used_cols):
        return rejection()

    uncovered = [
        (i, j)
        for i in range(p)
        for j in range(p)
        if g.cells[i][j] != row_label[i] and g.cells[i][j] != col_label[j]
    ]
    if len(uncovered) == 1:
        i, j = uncovered[0]
        v = g.cells[i][j]
        occurrences = sum(row.count(v) for row in g.cells)
        if (
            occurrences != 1
            or row_label[i] is not None
            or col_label[j] is not None
            or v in used_rows
            or v in used_cols
        ):
            return rejection()
        row_label[i] = v
        col_label[j] = v
    elif uncovered:
        return rejection()

    # Unlabeled lines are free; hand out the unused candidates in index
    # order.  On pattern-free inputs any completion regenerates g.
    for labels in (row_label, col_label):
        unused = sorted(set(range(p)) - set(v for v in labels if v is not None))
        holes = [t for t, v in enumerate(labels) if v is None]
        for t, v in zip(holes, unused):
            labels[t] = v

    def unit(c: Candidate) -> tuple[int, ...]:
        return tuple(1 if t == c else 0 for t in range(p))

    labeling = Labeling(
        row_labels=tuple(unit(v) for v in row_label),
        col_labels=tuple(unit(v) for v in col_label),
    )
    if not labeling_generates(g, labeling):
        return rejection()
    return RecognitionResult(ACCEPTED, "plurality", labeling=labeling)
