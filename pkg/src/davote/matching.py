"""Bipartite matching utilities for column-label recovery.

Left vertices are implicit indices into the adjacency list; right
vertices are indices in ``0..n_right-1``.  Adjacency lists are scanned
in the given order and left vertices in index order, so results are
deterministic for a fixed input.
"""

from __future__ import annotations

from .core import Strategy, argmax_set

__all__ = [
    "maximum_matching",
    "count_perfect_matchings",
    "column_adjacency",
]


def maximum_matching(adjacency: list[list[int]], n_right: int) -> list[int | None]:
    """Match left vertices to right ones, maximizing the matched count.

    Returns `match_left` with `match_left[i]` the right vertex matched
    to left vertex i, or None.  Runs in O(V * E).
    """
    match_left: list[int | None] = [None] * len(adjacency)
    match_right: list[int | None] = [None] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adjacency[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] is None or augment(match_right[j], seen):
                match_left[i] = j
                match_right[j] = i
                return True
        return False

    for i in range(len(adjacency)):
        augment(i, [False] * n_right)
    return match_left


def column_adjacency(
    cells,
    row_labels: list[Strategy],
    ys: list[Strategy],
    require_equal: bool,
) -> list[list[int]]:
    """Per column, the strategies able to reproduce it under fixed rows.

    Candidate y fits column j when the argmax set of row_labels[i] + y
    equals cell (i, j) for every row i (`require_equal`), or merely
    contains the cell entry (membership, for forms).  Strategy order in
    each list follows `ys`, keeping downstream matchings deterministic.
    """
    n_rows = len(cells)
    n_cols = len(cells[0])
    if require_equal:
        # Equality lets whole columns be hashed: group candidate
        # strategies by the column they generate.
        groups: dict[tuple, list[int]] = {}
        for t, y in enumerate(ys):
            key = tuple(
                argmax_set(tuple(a + b for a, b in zip(x, y))) for x in row_labels
            )
            groups.setdefault(key, []).append(t)
        return [
            list(groups.get(tuple(cells[i][j] for i in range(n_rows)), []))
            for j in range(n_cols)
        ]
    # Membership only constrains a column through its content, so
    # duplicate columns share one scan.
    content_cols: dict[tuple, list[int]] = {}
    for j in range(n_cols):
        key = tuple(cells[i][j] for i in range(n_rows))
        content_cols.setdefault(key, []).append(j)
    adjacency = [[] for _ in range(n_cols)]
    for t, y in enumerate(ys):
        ams = [
            argmax_set(tuple(a + b for a, b in zip(x, y))) for x in row_labels
        ]
        for content, cols in content_cols.items():
            if all(v in am for v, am in zip(content, ams)):
                for j in cols:
                    adjacency[j].append(t)
    return adjacency


def count_perfect_matchings(adjacency: list[list[int]], n_right: int, cap: int = 1_000_000) -> int:
    """Number of perfect matchings, counted by backtracking up to `cap`.

    Intended for small instances only; left side is assigned in order of
    increasing degree (fail-first).
    """
    n_left = len(adjacency)
    if n_left != n_right:
        return 0
    order = sorted(range(n_left), key=lambda i: len(adjacency[i]))
    used = [False] * n_right
    count = 0

    def walk(pos: int) -> None:
        nonlocal count
        if count >= cap:
            return
        if pos == n_left:
            count += 1
            return
        i = order[pos]
        for j in adjacency[i]:
            if not used[j]:
                used[j] = True
                walk(pos + 1)
                used[j] = False
                if count >= cap:
                    return

    walk(0)
    return min(count, cap)
