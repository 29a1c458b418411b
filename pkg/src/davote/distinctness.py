"""When do distributed approval tableaux have pairwise distinct rows?

Two row strategies x and x' stay distinguishable in every form exactly
when some column strategy y separates them completely, i.e. the winner
sets of x+y and x'+y are disjoint.  The set of such y is the
differentiating set D(x, x').  For correspondences the question is
easier: rows differ already when some cell differs as a set.

Both questions have closed-form answers in the voting parameters; the
direct routines here recompute them by enumeration so the closed forms
can be cross-checked on a grid.
"""

from __future__ import annotations

from .core import (
    ParameterError,
    SizeGuardError,
    Strategy,
    argmax_set,
    enumerate_strategies,
    generate_correspondence,
)

__all__ = [
    "SizeGuardError",
    "differentiating_set",
    "correspondence_rows_distinct",
    "correspondence_rows_distinct_direct",
    "identical_correspondence_rows",
    "all_forms_rows_distinct",
    "all_forms_rows_distinct_direct",
    "empty_differentiating_pairs",
    "neighbor_reduction_check",
]

DEFAULT_MAX_EVALS = 1_000_000


def _add(x: Strategy, y: Strategy) -> Strategy:
    return tuple(a + b for a, b in zip(x, y))


def differentiating_set(x: Strategy, xp: Strategy, p: int, beta: int) -> list[Strategy]:
    """Column strategies whose winner sets under x and xp are disjoint."""
    if len(x) != p or len(xp) != p:
        raise ParameterError("strategies must have one entry per candidate")
    out = []
    for y in enumerate_strategies(p, beta):
        if argmax_set(_add(x, y)).isdisjoint(argmax_set(_add(xp, y))):
            out.append(y)
    return out


def correspondence_rows_distinct(p: int, alpha: int, beta: int) -> bool:
    """Closed form: does the (p, alpha, beta) correspondence have distinct rows?

    For alpha >= 2 this holds iff beta >= alpha - 2.  Single-card row
    voters (alpha = 1) always produce distinct rows: the rows are the
    unit strategies and already their singleton-vs-singleton winner sets
    at suitable columns differ.
    """
    if p < 2:
        raise ParameterError(f"need at least 2 candidates, got p={p}")
    if alpha < 1 or beta < 1:
        raise ParameterError("voter weights must be >= 1")
    if alpha == 1:
        return True
    return beta >= alpha - 2


def correspondence_rows_distinct_direct(p: int, alpha: int, beta: int) -> bool:
    """Regenerate the correspondence and compare its rows pairwise."""
    corr = generate_correspondence(p, alpha, beta)
    seen = set()
    for row in corr.cells:
        if row in seen:
            return False
        seen.add(row)
    return True


def identical_correspondence_rows(
    p: int, alpha: int, beta: int
) -> list[tuple[Strategy, Strategy]]:
    """Row-strategy pairs whose correspondence rows coincide."""
    corr = generate_correspondence(p, alpha, beta)
    xs = enumerate_strategies(p, alpha)
    by_row: dict[tuple, list[int]] = {}
    for i, row in enumerate(corr.cells):
        by_row.setdefault(row, []).append(i)
    out = []
    for hits in by_row.values():
        out.extend(
            (xs[hits[i]], xs[hits[j]])
            for i in range(len(hits))
            for j in range(i + 1, len(hits))
        )
    return out


def all_forms_rows_distinct(p: int, alpha: int, beta: int) -> bool:
    """Closed form: do all (p, alpha, beta) forms have distinct rows?

    Equivalent to every pair of distinct row strategies having a
    nonempty differentiating set.  Three parameter cases:

    * p = 2: beta >= alpha - 1 and alpha + beta odd;
    * p = 3: beta >= 2*alpha, or beta == 2*alpha - 2;
    * p >= 4: (alpha, beta) != (1, 1) and beta >= 2*alpha - 2.
    """
    if p < 2:
        raise ParameterError(f"need at least 2 candidates, got p={p}")
    if alpha < 1 or beta < 1:
        raise ParameterError("voter weights must be >= 1")
    if p == 2:
        return beta >= alpha - 1 and (alpha + beta) % 2 == 1
    if p == 3:
        return beta >= 2 * alpha or beta == 2 * alpha - 2
    return (alpha, beta) != (1, 1) and beta >= 2 * alpha - 2


def _neighbor_pairs(xs: list[Strategy], p: int):
    """Pairs (x, x') with x = x' plus one card moved from b to a."""
    index = {x: None for x in xs}
    for x in xs:
        for a in range(p):
            if x[a] == 0:
                continue
            for b in range(p):
                if a == b:
                    continue
                moved = list(x)
                moved[a] -= 1
                moved[b] += 1
                xp = tuple(moved)
                if xp in index:
                    yield x, xp


def all_forms_rows_distinct_direct(
    p: int,
    alpha: int,
    beta: int,
    neighbors_only: bool = False,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> bool:
    """Direct check that every strategy pair has a differentiating column.

    With `neighbors_only` the check runs only over single-card-move
    pairs; moving one card can only shrink the differentiating set, so
    the neighbor verdict equals the all-pairs verdict at a fraction of
    the cost.  `max_evals` bounds the number of cell evaluations
    (roughly pairs times columns); exceeding it raises `SizeGuardError`.
    """
    xs = enumerate_strategies(p, alpha)
    ys = enumerate_strategies(p, beta)
    k = len(xs)
    pair_bound = k * p * p if neighbors_only else k * k
    if pair_bound * len(ys) > max_evals:
        raise SizeGuardError(
            f"direct check for p={p}, alpha={alpha}, beta={beta} needs about "
            f"{pair_bound * len(ys)} evaluations, over the budget of {max_evals}"
        )
    # The argmax of x+y is reused across pairs, so cache it per (x, y).
    am_rows = {x: [argmax_set(_add(x, y)) for y in ys] for x in xs}
    if neighbors_only:
        pairs = _neighbor_pairs(xs, p)
    else:
        pairs = ((xs[i], xs[j]) for i in range(k) for j in range(i + 1, k))
    for x, xp in pairs:
        row = am_rows[x]
        row_p = am_rows[xp]
        if not any(row[t].isdisjoint(row_p[t]) for t in range(len(ys))):
            return False
    return True


def empty_differentiating_pairs(
    p: int,
    alpha: int,
    beta: int,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> list[tuple[Strategy, Strategy]]:
    """All unordered strategy pairs with no differentiating column.

    The pairs witness that some form has two identical rows; an empty
    result means every form separates every pair.
    """
    xs = enumerate_strategies(p, alpha)
    ys = enumerate_strategies(p, beta)
    k = len(xs)
    if k * k * len(ys) > max_evals:
        raise SizeGuardError(
            f"pair scan for p={p}, alpha={alpha}, beta={beta} needs about "
            f"{k * k * len(ys)} evaluations, over the budget of {max_evals}"
        )
    am_rows = {x: [argmax_set(_add(x, y)) for y in ys] for x in xs}
    out = []
    for i in range(k):
        row = am_rows[xs[i]]
        for j in range(i + 1, k):
            row_p = am_rows[xs[j]]
            if not any(row[t].isdisjoint(row_p[t]) for t in range(len(ys))):
                out.append((xs[i], xs[j]))
    return out


def neighbor_reduction_check(
    p: int,
    alpha: int,
    beta: int,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> bool:
    """Verify the card-move reduction on one parameter point.

    For every ordered pair of distinct row strategies (x, x') and every
    single-card move of x' toward x (one card from a candidate where x'
    exceeds x onto one where x exceeds x', both drawn from the argmax of
    the difference), the differentiating set may only shrink:
    D(x, moved) is contained in D(x, x').  For p >= 3 the check also
    confirms that a differentiating column y for a single-card-move pair
    forces the two winner sets to be exactly the singletons {a} and {b}
    of the moved card's endpoints.

    Returns True when no counterexample exists.
    """
    xs = enumerate_strategies(p, alpha)
    ys = enumerate_strategies(p, beta)
    k = len(xs)
    # Differentiating sets are memoized per ordered pair, so the work is
    # bounded by k^2 set computations of len(ys) evaluations each.
    if k * k * len(ys) > max_evals:
        raise SizeGuardError(
            f"reduction check for p={p}, alpha={alpha}, beta={beta} needs about "
            f"{k * k * len(ys)} evaluations, over the budget of {max_evals}"
        )
    am_rows = {x: [argmax_set(_add(x, y)) for y in ys] for x in xs}
    memo: dict[tuple[Strategy, Strategy], frozenset[int]] = {}

    def dset(x: Strategy, xp: Strategy) -> frozenset[int]:
        key = (x, xp)
        got = memo.get(key)
        if got is None:
            row, row_p = am_rows[x], am_rows[xp]
            got = frozenset(
                t for t in range(len(ys)) if row[t].isdisjoint(row_p[t])
            )
            memo[key] = got
        return got

    for x in xs:
        for xp in xs:
            if x == xp:
                continue
            base = dset(x, xp)
            diff = [x[c] - xp[c] for c in range(p)]
            gains = argmax_set(tuple(diff))
            losses = argmax_set(tuple(-d for d in diff))
            for a in gains:
                for b in losses:
                    moved = list(xp)
                    moved[a] += 1
                    moved[b] -= 1
                    if not dset(x, tuple(moved)) <= base:
                        return False

    if p >= 3:
        for x, xp in _neighbor_pairs(xs, p):
            # x has one extra card on a and one fewer on b than xp.
            a = next(c for c in range(p) if x[c] > xp[c])
            b = next(c for c in range(p) if x[c] < xp[c])
            row, row_p = am_rows[x], am_rows[xp]
            for t in dset(x, xp):
                if row[t] != frozenset({a}) or row_p[t] != frozenset({b}):
                    return False
    return True
