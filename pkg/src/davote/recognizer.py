"""Polynomial-time recognition of distributed approval tableaux.

Correspondences are recognized in full generality: per-candidate row
signatures pin every row to at most one strategy once the wider side is
taken as columns, and the column labels follow from a perfect matching
on exact column reproduction.

Forms are recognized by a dispatch over the voting parameters.  The
workhorse is the winner-count route for p >= 3 and beta >= 2*alpha: for
every pair of row strategies, the candidates where the first out-holds
the second form a separating candidate set B, and counting how many of
a row's winners fall inside each B brackets the row between the "won
outright" and "still in contention" column counts of each strategy.
In that regime the bounds isolate a unique strategy per row.  The
remaining parameter families go to the single-card, two-card and
two-candidate recognizers, or to the exhaustive oracle when small
enough; anything else is reported as undecided rather than guessed.
"""

from __future__ import annotations

from .core import (
    CandidateSet,
    Correspondence,
    Form,
    Labeling,
    NoParametersError,
    ParameterError,
    Strategy,
    argmax_set,
    enumerate_strategies,
    infer_parameters,
    labeling_generates,
    row_signature,
    signature_of_strategy,
    transpose_tableau,
)
from .matching import column_adjacency, count_perfect_matchings, maximum_matching
from .oracle import oracle_recognize
from .plurality import recognize_plurality_form
from .results import ACCEPTED, REJECTED, UNDECIDED, RecognitionResult
from .special import NTableau, recognize_form_2_2, recognize_n_tableau

__all__ = [
    "b_set",
    "b_set_family",
    "lu_counts",
    "bipartite_column_matching",
    "count_column_matchings",
    "recognize_correspondence",
    "recognize_form",
    "recognize_tableau",
    "DEFAULT_ORACLE_CELLS",
]

DEFAULT_ORACLE_CELLS = 64


def b_set(x: Strategy, xp: Strategy) -> CandidateSet:
    """Candidates on which `x` places strictly more cards than `xp`."""
    if len(x) != len(xp) or sum(x) != sum(xp):
        raise ParameterError("strategies must have equal length and weight")
    if x == xp:
        raise ParameterError("strategies must be distinct")
    return frozenset(a for a in range(len(x)) if x[a] > xp[a])


def b_set_family(p: int, alpha: int) -> list[CandidateSet]:
    """All separating candidate sets over weight-`alpha` strategy pairs.

    Deduplicated and ordered by size then membership, so downstream
    scans are deterministic.
    """
    xs = enumerate_strategies(p, alpha)
    fam = {b_set(x, xp) for x in xs for xp in xs if x != xp}
    return sorted(fam, key=lambda s: (len(s), sorted(s)))


def lu_counts(x: Strategy, b: CandidateSet, p: int, beta: int) -> tuple[int, int]:
    """Lower and upper winner-count bounds of strategy `x` against `b`.

    The first entry counts opponent strategies against which `x` wins
    only inside `b` (argmax set contained in `b`), the second those
    where some member of `b` still wins (argmax set intersecting `b`).
    Any valid row labeled `x` has its in-`b` winner count between the
    two.
    """
    lo = hi = 0
    for y in enumerate_strategies(p, beta):
        am = argmax_set(tuple(a + c for a, c in zip(x, y)))
        if am <= b:
            lo += 1
        if am & b:
            hi += 1
    return lo, hi


def bipartite_column_matching(
    t: Correspondence | Form, row_labels: list[Strategy] | tuple[Strategy, ...]
) -> list[Strategy] | None:
    """Column labels compatible with fixed row labels, or None.

    An edge links column j to a candidate strategy y when y reproduces
    the observed column under every row label (exact winner sets for
    correspondences, membership for forms); a perfect matching in that
    graph is searched by augmenting paths.
    """
    p = t.candidates
    _, beta = infer_parameters(t.rows, t.cols, p)
    ys = enumerate_strategies(p, beta)
    adjacency = column_adjacency(
        t.cells, list(row_labels), ys, require_equal=isinstance(t, Correspondence)
    )
    match = maximum_matching(adjacency, len(ys))
    if any(m is None for m in match):
        return None
    return [ys[m] for m in match]


def count_column_matchings(
    t: Correspondence | Form,
    row_labels: list[Strategy] | tuple[Strategy, ...],
    cap: int = 1000,
) -> int:
    """Number of column labelings compatible with fixed row labels.

    Row labelings are unique whenever recognition succeeds, so this also
    counts the full labelings of `t`.  Counting is exhaustive; keep the
    instance small.
    """
    p = t.candidates
    _, beta = infer_parameters(t.rows, t.cols, p)
    ys = enumerate_strategies(p, beta)
    adjacency = column_adjacency(
        t.cells, list(row_labels), ys, require_equal=isinstance(t, Correspondence)
    )
    return count_perfect_matchings(adjacency, len(ys), cap=cap)


def recognize_correspondence(h: Correspondence) -> RecognitionResult:
    """Decide whether a set-valued tableau is a distributed approval table.

    Works for all parameters.  The narrower side is transposed into rows
    first; each row's signature (per-candidate winner counts) must then
    match exactly one strategy, and the columns must admit a perfect
    matching that reproduces them exactly.
    """
    method = "signature-matching"
    p = h.candidates
    try:
        alpha, beta = infer_parameters(h.rows, h.cols, p)
    except NoParametersError as e:
        return RecognitionResult(REJECTED, method, witness=str(e))

    if h.cols < h.rows:
        inner = recognize_correspondence(transpose_tableau(h))
        if inner.verdict == ACCEPTED:
            inner.labeling = Labeling(
                row_labels=inner.labeling.col_labels,
                col_labels=inner.labeling.row_labels,
            )
        elif inner.witness is not None:
            inner.witness = f"after transposing: {inner.witness}"
        return inner

    xs = enumerate_strategies(p, alpha)
    sigs: dict[tuple[int, ...], list[int]] = {}
    for xi, x in enumerate(xs):
        sigs.setdefault(signature_of_strategy(x, p, beta), []).append(xi)

    assignment: list[int] = []
    for i in range(h.rows):
        hits = sigs.get(row_signature(h, i), [])
        if len(hits) != 1:
            return RecognitionResult(
                REJECTED,
                method,
                witness=f"row {i} signature matches {len(hits)} strategies "
                f"instead of exactly one",
            )
        assignment.append(hits[0])
    if len(set(assignment)) != len(assignment):
        dup = next(xi for xi in assignment if assignment.count(xi) > 1)
        rows = [i for i, xi in enumerate(assignment) if xi == dup]
        return RecognitionResult(
            REJECTED,
            method,
            witness=f"rows {rows[0]} and {rows[1]} both map to strategy {xs[dup]}",
        )

    row_labels = [xs[xi] for xi in assignment]
    col_labels = bipartite_column_matching(h, row_labels)
    if col_labels is None:
        return RecognitionResult(
            REJECTED, method, witness="no perfect matching labels the columns"
        )
    labeling = Labeling(tuple(row_labels), tuple(col_labels))
    if not labeling_generates(h, labeling):
        return RecognitionResult(
            REJECTED, method, witness="labeling fails to regenerate the input"
        )
    return RecognitionResult(ACCEPTED, method, labeling=labeling)


def _recognize_form_lu(g: Form, p: int, alpha: int, beta: int) -> RecognitionResult:
    """Winner-count route, valid for p >= 3 and beta >= 2*alpha."""
    method = "lu-counting"
    xs = enumerate_strategies(p, alpha)
    ys = enumerate_strategies(p, beta)
    fam = b_set_family(p, alpha)

    bounds: list[dict[CandidateSet, tuple[int, int]]] = []
    for x in xs:
        ams = [argmax_set(tuple(a + c for a, c in zip(x, y))) for y in ys]
        by_b = {}
        for b in fam:
            lo = sum(1 for am in ams if am <= b)
            hi = sum(1 for am in ams if am & b)
            by_b[b] = (lo, hi)
        bounds.append(by_b)

    assignment: list[int] = []
    for i, row in enumerate(g.cells):
        counts = [0] * p
        for v in row:
            counts[v] += 1
        in_b = {b: sum(counts[a] for a in b) for b in fam}
        fits = [
            xi
            for xi in range(len(xs))
            if all(lo <= in_b[b] <= hi for b, (lo, hi) in bounds[xi].items())
        ]
        if not fits:
            b0 = next(
                b for b, (lo, hi) in bounds[0].items() if not lo <= in_b[b] <= hi
            )
            lo, hi = bounds[0][b0]
            return RecognitionResult(
                REJECTED,
                method,
                witness=f"row {i} satisfies no strategy's winner-count bounds "
                f"(e.g. {xs[0]} needs {lo} <= {in_b[b0]} <= {hi} on "
                f"candidates {sorted(b0)})",
            )
        if len(fits) > 1:
            return RecognitionResult(
                REJECTED,
                method,
                witness=f"row {i} satisfies the bounds of {len(fits)} "
                f"strategies; impossible for a tableau in this regime",
            )
        assignment.append(fits[0])

    if len(set(assignment)) != len(assignment):
        dup = next(xi for xi in assignment if assignment.count(xi) > 1)
        rows = [i for i, xi in enumerate(assignment) if xi == dup]
        return RecognitionResult(
            REJECTED,
            method,
            witness=f"rows {rows[0]} and {rows[1]} both map to strategy {xs[dup]}",
        )

    row_labels = [xs[xi] for xi in assignment]
    col_labels = bipartite_column_matching(g, row_labels)
    if col_labels is None:
        return RecognitionResult(
            REJECTED, method, witness="no perfect matching labels the columns"
        )
    labeling = Labeling(tuple(row_labels), tuple(col_labels))
    if not labeling_generates(g, labeling):
        return RecognitionResult(
            REJECTED, method, witness="labeling fails to regenerate the input"
        )
    return RecognitionResult(ACCEPTED, method, labeling=labeling)


def _swap_labeling(res: RecognitionResult) -> RecognitionResult:
    if res.verdict == ACCEPTED:
        res.labeling = Labeling(
            row_labels=res.labeling.col_labels,
            col_labels=res.labeling.row_labels,
        )
    elif res.witness is not None:
        res.witness = f"after transposing: {res.witness}"
    return res


def _oracle_fallback(g: Form, oracle_cells: int, reason: str) -> RecognitionResult:
    if g.rows * g.cols > oracle_cells:
        return RecognitionResult(
            UNDECIDED,
            "oracle",
            witness=f"{reason}, and {g.rows} x {g.cols} exceeds the oracle "
            f"guard of {oracle_cells} cells",
        )
    report = oracle_recognize(g, max_cells=oracle_cells)
    if report.is_dav:
        return RecognitionResult(ACCEPTED, "oracle", labeling=report.one_labeling)
    return RecognitionResult(
        REJECTED, "oracle", witness="exhaustive search found no labeling"
    )


def recognize_form(g: Form, oracle_cells: int = DEFAULT_ORACLE_CELLS) -> RecognitionResult:
    """Decide whether a single-winner tableau is a distributed approval form.

    Dispatches on the inferred voting parameters:

    1. p >= 3 with beta >= 2*alpha: winner-count bounds per row;
    2. p >= 3 with alpha >= 2*beta: same after transposing;
    3. alpha = beta = 1: forbidden-pattern recognition;
    4. alpha = beta = 2, p >= 3: occurrence-count intervals;
    5. p = 2: for odd alpha + beta the tie-free correspondence check,
       otherwise the exhaustive oracle;
    6. anything else: the oracle when at most `oracle_cells` cells,
       otherwise undecided.
    """
    p = g.candidates
    try:
        alpha, beta = infer_parameters(g.rows, g.cols, p)
    except NoParametersError as e:
        return RecognitionResult(REJECTED, "oracle", witness=str(e))

    if p >= 3 and beta >= 2 * alpha:
        return _recognize_form_lu(g, p, alpha, beta)
    if p >= 3 and alpha >= 2 * beta:
        return _swap_labeling(
            _recognize_form_lu(transpose_tableau(g), p, beta, alpha)
        )
    if alpha == 1 and beta == 1:
        return recognize_plurality_form(g)
    if alpha == 2 and beta == 2 and p >= 3:
        return recognize_form_2_2(g)
    if p == 2:
        if (alpha + beta) % 2 == 1:
            # No cell of the underlying correspondence can tie, so the
            # form must equal the correspondence cell for cell.
            as_corr = Correspondence(
                candidates=2,
                cells=tuple(
                    tuple(frozenset({v}) for v in row) for row in g.cells
                ),
            )
            inner = recognize_correspondence(as_corr)
            return RecognitionResult(
                inner.verdict,
                "two-candidate",
                labeling=inner.labeling,
                witness=inner.witness,
            )
        return _oracle_fallback(
            g, oracle_cells, "two-candidate tableau with tied totals"
        )
    return _oracle_fallback(
        g,
        oracle_cells,
        f"parameters p={p}, alpha={alpha}, beta={beta} fall outside every "
        f"implemented regime",
    )


def recognize_tableau(t: Correspondence | Form | NTableau, **kwargs) -> RecognitionResult:
    """Dispatch on the tableau type; keyword options go to `recognize_form`."""
    if isinstance(t, NTableau):
        return recognize_n_tableau(t)
    if isinstance(t, Correspondence):
        return recognize_correspondence(t)
    return recognize_form(t, **kwargs)
