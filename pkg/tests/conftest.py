"""Shared fixtures: small hand-checked tableaux used across the suite.

Candidates are referred to by index; A, B, C, D alias 0..3 for
readability.  The frozen matrices below were worked out by hand from
the generation rule (argmax of the card-count sum) and double-checked
cell by cell; tests treat them as ground truth rather than regenerating
them with the code under test.
"""

from __future__ import annotations

import pytest

from davote import Correspondence, Form

A, B, C, D = 0, 1, 2, 3


def corr(p: int, rows) -> Correspondence:
    return Correspondence(
        candidates=p,
        cells=tuple(tuple(frozenset(c) for c in row) for row in rows),
    )


def form(p: int, rows) -> Form:
    return Form(candidates=p, cells=tuple(tuple(row) for row in rows))


# Two voters, three cards each.  Rows and columns both follow the
# reverse-lexicographic strategy order (3,0), (2,1), (1,2), (0,3); the
# anti-diagonal carries the ties.
CORR_2_3_3_ROWS = (
    ({A}, {A}, {A}, {A, B}),
    ({A}, {A}, {A, B}, {B}),
    ({A}, {A, B}, {B}, {B}),
    ({A, B}, {B}, {B}, {B}),
)

# Two tie resolutions of the matrix above.  The first resolves the
# anti-diagonal to a, b, b, b and keeps all rows distinct; the second
# resolves it to b, b, a, a, making rows 1 and 2 coincide.
FORM_2_3_3_DISTINCT_ROWS = (
    (A, A, A, A),
    (A, A, B, B),
    (A, B, B, B),
    (B, B, B, B),
)
FORM_2_3_3_REPEATED_ROWS = (
    (A, A, A, B),
    (A, A, B, B),
    (A, A, B, B),
    (A, B, B, B),
)

# Square single-card forms that are not distributed approval, each
# embedding exactly one of the three forbidden patterns.
BAD_M1_ROWS = (
    (A, B, B),
    (C, A, B),
    (C, C, A),
)
BAD_M2_ROWS = (
    (A, A, A),
    (A, A, B),
    (A, A, C),
)
BAD_M3_ROWS = (
    (A, A, B, B),
    (A, C, C, B),
    (A, C, D, B),
    (A, D, D, B),
)


@pytest.fixture
def corr_2_3_3() -> Correspondence:
    return corr(2, CORR_2_3_3_ROWS)


@pytest.fixture
def form_distinct_rows() -> Form:
    return form(2, FORM_2_3_3_DISTINCT_ROWS)


@pytest.fixture
def form_repeated_rows() -> Form:
    return form(2, FORM_2_3_3_REPEATED_ROWS)


@pytest.fixture
def bad_m1() -> Form:
    return form(3, BAD_M1_ROWS)


@pytest.fixture
def bad_m2() -> Form:
    return form(3, BAD_M2_ROWS)


@pytest.fixture
def bad_m3() -> Form:
    return form(4, BAD_M3_ROWS)
