"""Core types and generators for distributed approval voting tableaux.

In a distributed approval election a voter holds a fixed number of
identical cards (the voter's weight) and distributes all of them among
the candidates.  With two voters of weights ``alpha`` and ``beta`` the
joint outcome table is a matrix indexed by the two voters' strategies:
each cell holds the set of candidates with the maximum combined card
count.  Keeping the full set in every cell gives a *correspondence*;
picking a single winner out of every cell gives a *form*.

Candidates are the integers ``0..p-1``.  A strategy is a tuple of ``p``
non-negative card counts summing to the voter's weight.  Strategies are
enumerated in reverse-lexicographic order, so ``(w, 0, ..., 0)`` comes
first and ``(0, ..., 0, w)`` last, and row/column positions of generated
tableaux follow that order.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from itertools import product

__all__ = [
    "Candidate",
    "Strategy",
    "CandidateSet",
    "Signature",
    "Correspondence",
    "Form",
    "Labeling",
    "PlaneLabeling",
    "ParameterError",
    "NoParametersError",
    "CapExceededError",
    "SizeGuardError",
    "TIE_RULES",
    "enumerate_strategies",
    "strategy_count",
    "argmax_set",
    "generate_correspondence",
    "generate_form",
    "enumerate_all_forms",
    "signature_of_strategy",
    "row_signature",
    "infer_parameters",
    "labeling_generates",
    "permute_tableau",
    "transpose_tableau",
    "default_names",
]

Candidate = int
Strategy = tuple[int, ...]
CandidateSet = frozenset[int]
Signature = tuple[int, ...]

TIE_RULES = ("min-index", "max-index")


class ParameterError(ValueError):
    """Raised for voting parameters outside the valid domain."""


class NoParametersError(ParameterError):
    """Raised when no (alpha, beta) reproduce the given matrix shape.

    For recognition purposes this signals that the input cannot be a
    distributed approval tableau of any weight pair.
    """


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""


class SizeGuardError(RuntimeError):
    """Raised when an exhaustive computation would exceed its size budget."""


def _check_params(p: int, *weights: int) -> None:
    if p < 2:
        raise ParameterError(f"need at least 2 candidates, got p={p}")
    for w in weights:
        if w < 1:
            raise ParameterError(f"voter weight must be >= 1, got {w}")


def strategy_count(p: int, weight: int) -> int:
    """Number of ways to distribute `weight` cards among `p` candidates."""
    _check_params(p, weight)
    return math.comb(weight + p - 1, p - 1)


def enumerate_strategies(p: int, weight: int) -> list[Strategy]:
    """All distributions of `weight` cards among `p` candidates.

    Returned in reverse-lexicographic order: ``(weight, 0, ..., 0)``
    first, ``(0, ..., 0, weight)`` last.  The list has
    ``C(weight + p - 1, p - 1)`` entries.
    """
    _check_params(p, weight)
    out: list[Strategy] = []
    partial = [0] * p

    def fill(pos: int, left: int) -> None:
        if pos == p - 1:
            partial[pos] = left
            out.append(tuple(partial))
            return
        for c in range(left, -1, -1):
            partial[pos] = c
            fill(pos + 1, left - c)

    fill(0, weight)
    return out


def argmax_set(z: Strategy) -> CandidateSet:
    """Set of positions holding the maximum entry of `z`."""
    top = max(z)
    return frozenset(i for i, v in enumerate(z) if v == top)


def _vec_add(x: Strategy, y: Strategy) -> Strategy:
    return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True)
class Correspondence:
    """Outcome matrix whose cells are full argmax sets.

    `cells[i][j]` is the winner set when the row voter plays the i-th
    strategy and the column voter the j-th one.  `candidates` is the
    number of candidates p; cell members must lie in ``0..p-1``.
    """

    candidates: int
    cells: tuple[tuple[CandidateSet, ...], ...]

    def __post_init__(self) -> None:
        _validate_grid(self.cells, self.candidates, kind="correspondence")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])


@dataclass(frozen=True)
class Form:
    """Outcome matrix whose cells are single winners (resolved ties)."""

    candidates: int
    cells: tuple[tuple[Candidate, ...], ...]

    def __post_init__(self) -> None:
        _validate_grid(self.cells, self.candidates, kind="form")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])


def _validate_grid(cells, p: int, kind: str) -> None:
    if p < 2:
        raise ParameterError(f"need at least 2 candidates, got p={p}")
    if not cells or not cells[0]:
        raise ParameterError(f"empty {kind} matrix")
    width = len(cells[0])
    for row in cells:
        if len(row) != width:
            raise ParameterError(f"ragged {kind} matrix")
        for cell in row:
            if kind == "correspondence":
                if not cell:
                    raise ParameterError("correspondence cell is empty")
                bad = [c for c in cell if not 0 <= c < p]
                if bad:
                    raise ParameterError(f"candidate {bad[0]} out of range 0..{p - 1}")
            else:
                if not 0 <= cell < p:
                    raise ParameterError(f"candidate {cell} out of range 0..{p - 1}")


@dataclass(frozen=True)
class Labeling:
    """Row and column strategies recovered by a recognizer.

    `row_labels[i]` is the strategy assigned to row i, `col_labels[j]`
    the strategy assigned to column j.  Both are bijections onto the
    respective strategy sets.
    """

    row_labels: tuple[Strategy, ...]
    col_labels: tuple[Strategy, ...]


@dataclass(frozen=True)
class PlaneLabeling:
    """Per-axis strategy values recovered for an n-voter tableau.

    `axis_labels[i][t]` is the card count on the first candidate that
    voter i plays in the plane currently at index t along axis i.
    """

    axis_labels: tuple[tuple[int, ...], ...]


def generate_correspondence(p: int, alpha: int, beta: int) -> Correspondence:
    """Joint outcome table for two voters of weights `alpha` and `beta`.

    Rows follow `enumerate_strategies(p, alpha)`, columns
    `enumerate_strategies(p, beta)`; every cell is the argmax set of the
    summed strategies.
    """
    _check_params(p, alpha, beta)
    xs = enumerate_strategies(p, alpha)
    ys = enumerate_strategies(p, beta)
    cells = tuple(
        tuple(argmax_set(_vec_add(x, y)) for y in ys) for x in xs
    )
    return Correspondence(candidates=p, cells=cells)


def generate_form(p: int, alpha: int, beta: int, tie_rule: str = "min-index") -> Form:
    """Like `generate_correspondence` but with every tie resolved.

    `tie_rule` picks the winner inside each argmax set: "min-index"
    takes the smallest candidate index, "max-index" the largest.
    """
    if tie_rule not in TIE_RULES:
        raise ParameterError(f"unknown tie rule {tie_rule!r}, expected one of {TIE_RULES}")
    corr = generate_correspondence(p, alpha, beta)
    pick = min if tie_rule == "min-index" else max
    cells = tuple(tuple(pick(cell) for cell in row) for row in corr.cells)
    return Form(candidates=p, cells=cells)


def enumerate_all_forms(p: int, alpha: int, beta: int, cap: int = 10_000) -> list[Form]:
    """Every form obtainable from the (p, alpha, beta) correspondence.

    Each cell of the correspondence contributes one independent choice,
    so the result has ``prod(len(cell))`` entries.  Raises
    `CapExceededError` when that product exceeds `cap`; distinct choice
    vectors always give distinct matrices, so the count is exact.
    """
    corr = generate_correspondence(p, alpha, beta)
    total = 1
    for row in corr.cells:
        for cell in row:
            total *= len(cell)
            if total > cap:
                raise CapExceededError(
                    f"{total}+ forms for p={p}, alpha={alpha}, beta={beta} exceed cap={cap}"
                )
    rows = corr.rows
    cols = corr.cols
    flat_choices = [sorted(cell) for row in corr.cells for cell in row]
    forms = []
    for combo in product(*flat_choices):
        cells = tuple(
            tuple(combo[i * cols + j] for j in range(cols)) for i in range(rows)
        )
        forms.append(Form(candidates=p, cells=cells))
    return forms


def signature_of_strategy(x: Strategy, p: int, beta: int) -> Signature:
    """Per-candidate count of opponent strategies that keep it winning.

    Entry a is the number of weight-`beta` strategies y for which
    candidate a belongs to the argmax set of x + y.
    """
    _check_params(p, beta)
    if len(x) != p or sum(x) < 1 or any(v < 0 for v in x):
        raise ParameterError(f"{x!r} is not a valid strategy over {p} candidates")
    counts = [0] * p
    for y in enumerate_strategies(p, beta):
        for a in argmax_set(_vec_add(x, y)):
            counts[a] += 1
    return tuple(counts)


def row_signature(h: Correspondence | Form, i: int) -> Signature:
    """Per-candidate occurrence count along row i of `h`.

    Counts set membership for a correspondence and cell equality for a
    form, so a form row's counts sum to the row length while a
    correspondence row's sum exceeds it by the number of tied entries.
    """
    counts = [0] * h.candidates
    for cell in h.cells[i]:
        if isinstance(cell, frozenset):
            for a in cell:
                counts[a] += 1
        else:
            counts[cell] += 1
    return tuple(counts)


def infer_parameters(k: int, l: int, p: int) -> tuple[int, int]:
    """Recover the voter weights (alpha, beta) from a k x l shape.

    The map ``w -> C(w + p - 1, p - 1)`` is strictly increasing, so each
    dimension determines at most one weight.  Raises
    `NoParametersError` when a dimension matches no weight, which means
    the matrix cannot be a distributed approval tableau for this p.
    """
    if p < 2:
        raise ParameterError(f"need at least 2 candidates, got p={p}")

    def invert(n: int, what: str) -> int:
        w = 1
        while True:
            c = math.comb(w + p - 1, p - 1)
            if c == n:
                return w
            if c > n:
                raise NoParametersError(
                    f"no voter weight gives {n} {what} for p={p} candidates"
                )
            w += 1

    return invert(k, "rows"), invert(l, "columns")


def labeling_generates(t: Correspondence | Form, labeling: Labeling) -> bool:
    """Whether applying `labeling` reproduces `t` exactly.

    Correspondence cells must equal the argmax set of the summed label
    strategies; form cells must be members of it.
    """
    if len(labeling.row_labels) != t.rows or len(labeling.col_labels) != t.cols:
        return False
    is_corr = isinstance(t, Correspondence)
    for i, x in enumerate(labeling.row_labels):
        row = t.cells[i]
        for j, y in enumerate(labeling.col_labels):
            am = argmax_set(_vec_add(x, y))
            if is_corr:
                if row[j] != am:
                    return False
            elif row[j] not in am:
                return False
    return True


def permute_tableau(t, row_perm, col_perm):
    """Rearranged copy of a 2-voter tableau.

    `row_perm[i]` is the source row placed at new position i, likewise
    `col_perm` for columns; both must be permutations of the index
    ranges.
    """
    if sorted(row_perm) != list(range(t.rows)) or sorted(col_perm) != list(range(t.cols)):
        raise ParameterError("row_perm/col_perm must permute the tableau indices")
    cells = tuple(
        tuple(t.cells[ri][cj] for cj in col_perm) for ri in row_perm
    )
    return type(t)(candidates=t.candidates, cells=cells)


def transpose_tableau(t):
    """The same tableau with the two voters' roles swapped."""
    cells = tuple(
        tuple(t.cells[i][j] for i in range(t.rows)) for j in range(t.cols)
    )
    return type(t)(candidates=t.candidates, cells=cells)


def default_names(p: int) -> list[str]:
    """Candidate display names: a..z, then aa, ab, ... for larger p."""
    names = []
    for i in range(p):
        s = ""
        n = i
        while True:
            s = string.ascii_lowercase[n % 26] + s
            n = n // 26 - 1
            if n < 0:
                break
        names.append(s)
    return names
