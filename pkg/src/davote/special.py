"""Special-case recognizers: two-card voters and two-candidate elections.

Two independent extensions of the basic machinery live here.  The first
handles forms where both voters hold exactly two cards: per-row
occurrence counts fall into three disjoint intervals that reveal the
row's strategy outright.  The second handles any number of voters over
two candidates, where a strategy is just the number of cards put on the
first candidate and the outcome only depends on the total.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import (
    CandidateSet,
    Correspondence,
    Form,
    Labeling,
    ParameterError,
    PlaneLabeling,
    TIE_RULES,
    enumerate_strategies,
    labeling_generates,
)
from .matching import column_adjacency, maximum_matching
from .results import ACCEPTED, REJECTED, RecognitionResult

__all__ = [
    "CountInterval",
    "NTableau",
    "count_intervals",
    "recognize_form_2_2",
    "generate_n_tableau",
    "plane_signature",
    "recognize_n_tableau",
    "permute_axes",
    "n_tableau_as_grid",
]


@dataclass(frozen=True)
class CountInterval:
    """Inclusive occurrence-count range with the row kind it identifies."""

    lo: int
    hi: int
    role: str

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


def count_intervals(p: int) -> tuple[CountInterval, CountInterval, CountInterval]:
    """Occurrence-count intervals for two-card rows over p >= 3 candidates.

    In a row labeled with the doubled strategy on a, candidate a wins
    between (p*p - p + 2) / 2 and p*(p + 1) / 2 cells.  In a row labeled
    with a split strategy on {a, b}, each of a and b wins between p - 1
    and (p*p - 3*p + 6) / 2 cells, and every third candidate between 1
    and p - 2.  The three intervals are pairwise disjoint, so the counts
    determine the row label.
    """
    if p < 3:
        raise ParameterError(f"count intervals need p >= 3, got p={p}")
    return (
        CountInterval(1, p - 2, "other"),
        CountInterval(p - 1, (p * p - 3 * p + 6) // 2, "split-pair"),
        CountInterval((p * p - p + 2) // 2, p * (p + 1) // 2, "doubled"),
    )


def recognize_form_2_2(g: Form) -> RecognitionResult:
    """Decide whether a form is distributed approval with two cards each.

    Requires p >= 3 candidates and a p*(p+1)/2 square matrix.  Row
    labels are read off the occurrence-count intervals and must exhaust
    all two-card strategies; columns are then matched by membership.
    """
    p = g.candidates
    if p < 3:
        raise ParameterError(f"two-card recognition needs p >= 3, got p={p}")
    size = p * (p + 1) // 2
    method = "counting-intervals"
    if g.rows != size or g.cols != size:
        return RecognitionResult(
            REJECTED,
            method,
            witness=f"two-card tableau over {p} candidates must be "
            f"{size} x {size}, got {g.rows} x {g.cols}",
        )
    low, mid, top = count_intervals(p)

    row_labels: list[tuple[int, ...]] = []
    for i, row in enumerate(g.cells):
        counts = [0] * p
        for v in row:
            counts[v] += 1
        m = max(counts)
        if m in top:
            a = counts.index(m)
            if any(counts[c] > 1 for c in range(p) if c != a):
                return RecognitionResult(
                    REJECTED,
                    method,
                    witness=f"row {i}: dominant candidate {a} but another "
                    f"candidate repeats",
                )
            label = tuple(2 if c == a else 0 for c in range(p))
        elif m in mid:
            pair = [c for c in range(p) if counts[c] in mid]
            rest_ok = all(
                counts[c] in low for c in range(p) if c not in pair
            )
            if len(pair) != 2 or not rest_ok:
                return RecognitionResult(
                    REJECTED,
                    method,
                    witness=f"row {i}: occurrence counts {counts} fit no "
                    f"two-card row profile",
                )
            label = tuple(1 if c in pair else 0 for c in range(p))
        else:
            return RecognitionResult(
                REJECTED,
                method,
                witness=f"row {i}: top count {m} falls outside every interval",
            )
        row_labels.append(label)

    if sorted(row_labels) != sorted(enumerate_strategies(p, 2)):
        return RecognitionResult(
            REJECTED,
            method,
            witness="row labels do not exhaust the two-card strategies",
        )

    ys = enumerate_strategies(p, 2)
    adjacency = column_adjacency(g.cells, row_labels, ys, require_equal=False)
    match = maximum_matching(adjacency, len(ys))
    if any(m is None for m in match):
        j = match.index(None)
        return RecognitionResult(
            REJECTED, method, witness=f"no column strategy fits column {j}"
        )
    labeling = Labeling(
        row_labels=tuple(row_labels),
        col_labels=tuple(ys[m] for m in match),
    )
    if not labeling_generates(g, labeling):
        return RecognitionResult(
            REJECTED, method, witness="labeling fails to regenerate the input"
        )
    return RecognitionResult(ACCEPTED, method, labeling=labeling)


# In two-candidate elections a strategy is the card count z placed on
# candidate 0 (the rest goes on candidate 1), and a cell only depends on
# the total: above half the weight sum candidate 0 wins, below it
# candidate 1, at exactly half they tie.

A, B = 0, 1


@dataclass(frozen=True)
class NTableau:
    """Joint outcome table for n voters over two candidates.

    `cells` is flat in row-major order over the index space
    ``product(range(w + 1) for w in weights)``; axis i belongs to voter
    i.  Correspondence cells are winner sets, form cells single winners.
    """

    weights: tuple[int, ...]
    kind: str
    cells: tuple

    def __post_init__(self) -> None:
        if self.kind not in ("correspondence", "form"):
            raise ParameterError(f"unknown tableau kind {self.kind!r}")
        if not self.weights:
            raise ParameterError("need at least one voter")
        if any(w < 1 for w in self.weights):
            raise ParameterError("voter weights must be >= 1")
        expected = 1
        for w in self.weights:
            expected *= w + 1
        if len(self.cells) != expected:
            raise ParameterError(
                f"expected {expected} cells for weights {self.weights}, "
                f"got {len(self.cells)}"
            )
        for cell in self.cells:
            if self.kind == "correspondence":
                if not isinstance(cell, frozenset) or not cell or not cell <= {A, B}:
                    raise ParameterError(f"bad correspondence cell {cell!r}")
            elif cell not in (A, B):
                raise ParameterError(f"bad form cell {cell!r}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(w + 1 for w in self.weights)

    def flat_index(self, z: tuple[int, ...]) -> int:
        idx = 0
        for t, d in zip(z, self.dims):
            idx = idx * d + t
        return idx

    def cell(self, z: tuple[int, ...]):
        return self.cells[self.flat_index(z)]


def _threshold_cell(total: int, sigma: int) -> CandidateSet:
    if 2 * total > sigma:
        return frozenset({A})
    if 2 * total == sigma:
        return frozenset({A, B})
    return frozenset({B})


def generate_n_tableau(
    weights: tuple[int, ...] | list[int],
    kind: str = "correspondence",
    tie_rule: str = "min-index",
) -> NTableau:
    """Outcome table for n voters with the given weights.

    Cell winners follow the card total on candidate 0: strictly above
    half the combined weight candidate 0 wins alone, strictly below it
    candidate 1, and exactly at half both tie.  For forms the tie cells
    are resolved by `tie_rule`.
    """
    if tie_rule not in TIE_RULES:
        raise ParameterError(f"unknown tie rule {tie_rule!r}, expected one of {TIE_RULES}")
    weights = tuple(int(w) for w in weights)
    sigma = sum(weights)
    pick = min if tie_rule == "min-index" else max
    cells = []
    for z in product(*(range(w + 1) for w in weights)):
        am = _threshold_cell(sum(z), sigma)
        cells.append(am if kind == "correspondence" else pick(am))
    return NTableau(weights=weights, kind=kind, cells=tuple(cells))


def plane_signature(f: NTableau, axis: int, z: int, c: int) -> int:
    """How often candidate `c` wins in the plane fixing `axis` at `z`."""
    if not 0 <= axis < len(f.weights):
        raise ParameterError(f"axis {axis} out of range")
    if not 0 <= z <= f.weights[axis]:
        raise ParameterError(f"plane {z} out of range on axis {axis}")
    count = 0
    for idx in _plane_indices(f.dims, axis, z):
        cell = f.cells[idx]
        if (c in cell) if f.kind == "correspondence" else (cell == c):
            count += 1
    return count


def _plane_indices(dims: tuple[int, ...], axis: int, z: int):
    ranges = [range(d) if i != axis else (z,) for i, d in enumerate(dims)]
    for vec in product(*ranges):
        idx = 0
        for t, d in zip(vec, dims):
            idx = idx * d + t
        yield idx


def recognize_n_tableau(f: NTableau) -> RecognitionResult:
    """Decide whether an n-voter two-candidate tableau is distributed approval.

    Along each axis, adding cards to candidate 0 grows its winner count
    within the voter's plane and shrinks candidate 1's, so sorting each
    axis's planes by (wins of 0 ascending, wins of 1 descending)
    recovers a viable labeling: planes tied on both counts carry
    identical cells and are interchangeable.  The tableau is accepted
    iff every cell then matches the half-total threshold rule.
    """
    method = "two-candidate"
    sigma = sum(f.weights)
    labels: list[tuple[int, ...]] = []
    for axis, w in enumerate(f.weights):
        counts = [
            (plane_signature(f, axis, z, A), -plane_signature(f, axis, z, B))
            for z in range(w + 1)
        ]
        order = sorted(range(w + 1), key=lambda z: (counts[z], z))
        axis_label = [0] * (w + 1)
        for rank, plane in enumerate(order):
            axis_label[plane] = rank
        labels.append(tuple(axis_label))

    for z in product(*(range(w + 1) for w in f.weights)):
        total = sum(labels[i][t] for i, t in enumerate(z))
        am = _threshold_cell(total, sigma)
        cell = f.cell(z)
        ok = (cell == am) if f.kind == "correspondence" else (cell in am)
        if not ok:
            return RecognitionResult(
                REJECTED,
                method,
                witness=f"cell at index {z} (card total {total}) violates "
                f"the threshold rule",
            )
    return RecognitionResult(
        ACCEPTED, method, labeling=PlaneLabeling(tuple(labels))
    )


def permute_axes(f: NTableau, perms: list[list[int]] | tuple) -> NTableau:
    """Rearranged copy with `perms[i][t]` the source plane at position t."""
    if len(perms) != len(f.weights):
        raise ParameterError("need one permutation per axis")
    for perm, d in zip(perms, f.dims):
        if sorted(perm) != list(range(d)):
            raise ParameterError(f"{perm!r} does not permute 0..{d - 1}")
    cells = []
    for z in product(*(range(d) for d in f.dims)):
        src = tuple(perm[t] for perm, t in zip(perms, z))
        cells.append(f.cell(src))
    return NTableau(weights=f.weights, kind=f.kind, cells=tuple(cells))


def n_tableau_as_grid(f: NTableau):
    """The two-voter equivalent 2-D tableau (rows are axis-0 planes)."""
    if len(f.weights) != 2:
        raise ParameterError("only 2-voter tableaux convert to a grid")
    rows, cols = f.dims
    cells = tuple(
        tuple(f.cell((i, j)) for j in range(cols)) for i in range(rows)
    )
    if f.kind == "correspondence":
        return Correspondence(candidates=2, cells=cells)
    return Form(candidates=2, cells=cells)
