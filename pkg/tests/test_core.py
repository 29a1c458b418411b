"""Strategy enumeration, tableau generation, signatures, labelings."""

from __future__ import annotations

from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from davote import (
    CapExceededError,
    Correspondence,
    Form,
    Labeling,
    NoParametersError,
    ParameterError,
    argmax_set,
    default_names,
    enumerate_all_forms,
    enumerate_strategies,
    generate_correspondence,
    generate_form,
    infer_parameters,
    labeling_generates,
    permute_tableau,
    row_signature,
    signature_of_strategy,
    strategy_count,
    transpose_tableau,
)
from conftest import A, B, corr, form

params = st.tuples(st.integers(2, 4), st.integers(1, 5))


class TestEnumerateStrategies:
    def test_two_candidates_three_cards(self):
        assert enumerate_strategies(2, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]

    def test_three_candidates_two_cards(self):
        got = enumerate_strategies(3, 2)
        assert got[0] == (2, 0, 0)
        assert got[-1] == (0, 0, 2)
        assert len(got) == 6

    def test_single_card(self):
        assert enumerate_strategies(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    @given(params)
    def test_count_order_and_weights(self, pw):
        p, w = pw
        xs = enumerate_strategies(p, w)
        assert len(xs) == strategy_count(p, w) == comb(w + p - 1, p - 1)
        assert all(sum(x) == w and min(x) >= 0 for x in xs)
        assert len(set(xs)) == len(xs)
        assert xs == sorted(xs, reverse=True)

    @pytest.mark.parametrize("p,w", [(1, 1), (0, 2), (2, 0), (3, -1)])
    def test_rejects_bad_parameters(self, p, w):
        with pytest.raises(ParameterError):
            enumerate_strategies(p, w)


class TestArgmax:
    @pytest.mark.parametrize(
        "z,expected",
        [
            ((3, 3), {0, 1}),
            ((5, 1), {0}),
            ((2, 2, 2), {0, 1, 2}),
            ((0, 1, 0), {1}),
            ((4, 2, 4), {0, 2}),
        ],
    )
    def test_examples(self, z, expected):
        assert argmax_set(z) == frozenset(expected)

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
    def test_matches_naive_max(self, zs):
        z = tuple(zs)
        top = max(z)
        assert argmax_set(z) == frozenset(i for i, v in enumerate(z) if v == top)


class TestGenerateCorrespondence:
    def test_two_voters_three_cards(self, corr_2_3_3):
        assert generate_correspondence(2, 3, 3) == corr_2_3_3

    def test_unit_weights_two_candidates(self):
        got = generate_correspondence(2, 1, 1)
        assert got == corr(2, (({A}, {A, B}), ({A, B}, {B})))

    def test_unit_weights_three_candidates(self):
        got = generate_correspondence(3, 1, 1)
        for i in range(3):
            for j in range(3):
                want = {i} if i == j else {i, j}
                assert got.cells[i][j] == frozenset(want)

    @given(params, st.integers(1, 4))
    @settings(max_examples=30, deadline=None)
    def test_cells_are_argmax_sets(self, pa, beta):
        p, alpha = pa
        h = generate_correspondence(p, alpha, beta)
        xs = enumerate_strategies(p, alpha)
        ys = enumerate_strategies(p, beta)
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                z = tuple(a + b for a, b in zip(x, y))
                assert h.cells[i][j] == argmax_set(z)


class TestGenerateForm:
    def test_min_index_three_cards(self):
        got = generate_form(2, 3, 3, "min-index")
        assert got == form(2, ((A, A, A, A), (A, A, A, B), (A, A, B, B), (A, B, B, B)))

    def test_max_index_three_cards(self):
        got = generate_form(2, 3, 3, "max-index")
        assert got == form(2, ((A, A, A, B), (A, A, B, B), (A, B, B, B), (B, B, B, B)))

    def test_unknown_tie_rule(self):
        with pytest.raises(ParameterError):
            generate_form(2, 1, 1, "coin-flip")

    @given(params, st.integers(1, 4), st.sampled_from(["min-index", "max-index"]))
    @settings(max_examples=30, deadline=None)
    def test_form_cell_inside_correspondence_cell(self, pa, beta, rule):
        p, alpha = pa
        h = generate_correspondence(p, alpha, beta)
        g = generate_form(p, alpha, beta, rule)
        for i in range(h.rows):
            for j in range(h.cols):
                assert g.cells[i][j] in h.cells[i][j]


class TestEnumerateAllForms:
    def test_counts(self):
        assert len(enumerate_all_forms(2, 3, 3)) == 16
        assert len(enumerate_all_forms(2, 1, 1)) == 4

    def test_tie_free_instance_has_one_form(self):
        forms = enumerate_all_forms(2, 1, 2)
        assert forms == [form(2, ((A, A, B), (A, B, B)))]

    def test_forms_distinct_and_consistent(self):
        h = generate_correspondence(2, 3, 3)
        forms = enumerate_all_forms(2, 3, 3)
        assert len(set(forms)) == 16
        for g in forms:
            for i in range(h.rows):
                for j in range(h.cols):
                    assert g.cells[i][j] in h.cells[i][j]
        assert generate_form(2, 3, 3, "min-index") in forms
        assert generate_form(2, 3, 3, "max-index") in forms

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_all_forms(2, 3, 3, cap=15)


class TestSignatures:
    def test_extreme_strategies(self):
        assert signature_of_strategy((3, 0), 2, 3) == (4, 1)
        assert signature_of_strategy((0, 3), 2, 3) == (1, 4)

    def test_balanced_strategy(self):
        # x = (1, 1) against weight-2 replies: sums (3,1), (2,2), (1,3).
        assert signature_of_strategy((1, 1), 2, 2) == (2, 2)

    def test_row_signature_of_correspondence(self, corr_2_3_3):
        assert row_signature(corr_2_3_3, 0) == (4, 1)
        assert row_signature(corr_2_3_3, 3) == (1, 4)

    def test_row_signature_of_form(self, form_repeated_rows):
        assert row_signature(form_repeated_rows, 1) == (2, 2)
        assert row_signature(form_repeated_rows, 2) == (2, 2)

    def test_bad_strategy(self):
        with pytest.raises(ParameterError):
            signature_of_strategy((1, 0, 0), 2, 2)

    @given(params, st.integers(1, 4))
    @settings(max_examples=20, deadline=None)
    def test_generated_rows_carry_their_strategy_signature(self, pa, beta):
        p, alpha = pa
        h = generate_correspondence(p, alpha, beta)
        for i, x in enumerate(enumerate_strategies(p, alpha)):
            assert row_signature(h, i) == signature_of_strategy(x, p, beta)

    @given(params, st.integers(1, 4))
    @settings(max_examples=20, deadline=None)
    def test_signature_totals(self, pa, beta):
        # A form row sums to the number of columns; a correspondence row
        # exceeds it by the tie cells' extra members.
        p, alpha = pa
        h = generate_correspondence(p, alpha, beta)
        g = generate_form(p, alpha, beta)
        for i in range(h.rows):
            assert sum(row_signature(g, i)) == h.cols
            extra = sum(len(c) - 1 for c in h.cells[i])
            assert sum(row_signature(h, i)) == h.cols + extra


class TestInferParameters:
    @pytest.mark.parametrize(
        "k,l,p,expected",
        [
            (4, 4, 2, (3, 3)),
            (5, 4, 2, (4, 3)),
            (3, 3, 3, (1, 1)),
            (6, 10, 3, (2, 3)),
            (15, 3, 3, (4, 1)),
        ],
    )
    def test_examples(self, k, l, p, expected):
        assert infer_parameters(k, l, p) == expected

    def test_impossible_row_count(self):
        with pytest.raises(NoParametersError):
            infer_parameters(7, 4, 3)

    def test_impossible_column_count(self):
        with pytest.raises(NoParametersError):
            infer_parameters(6, 7, 3)

    @given(params, st.integers(1, 5))
    def test_round_trip(self, pa, beta):
        p, alpha = pa
        k = strategy_count(p, alpha)
        l = strategy_count(p, beta)
        assert infer_parameters(k, l, p) == (alpha, beta)


class TestLabelingGenerates:
    def _identity(self, p, alpha, beta):
        return Labeling(
            row_labels=tuple(enumerate_strategies(p, alpha)),
            col_labels=tuple(enumerate_strategies(p, beta)),
        )

    def test_generated_instances(self):
        for p, alpha, beta in [(2, 3, 3), (3, 1, 2), (3, 2, 2)]:
            lab = self._identity(p, alpha, beta)
            assert labeling_generates(generate_correspondence(p, alpha, beta), lab)
            assert labeling_generates(generate_form(p, alpha, beta), lab)

    def test_form_membership_is_enough(self, form_repeated_rows):
        assert labeling_generates(form_repeated_rows, self._identity(2, 3, 3))

    def test_mismatched_cells(self, corr_2_3_3):
        swapped = permute_tableau(corr_2_3_3, [1, 0, 2, 3], [0, 1, 2, 3])
        assert not labeling_generates(swapped, self._identity(2, 3, 3))

    def test_wrong_shape(self, corr_2_3_3):
        assert not labeling_generates(corr_2_3_3, self._identity(2, 3, 2))


class TestPermuteTranspose:
    def test_identity(self, corr_2_3_3):
        same = permute_tableau(corr_2_3_3, [0, 1, 2, 3], [0, 1, 2, 3])
        assert same == corr_2_3_3

    def test_permutation_moves_cells(self, form_distinct_rows):
        g = permute_tableau(form_distinct_rows, [3, 2, 1, 0], [0, 1, 2, 3])
        assert g.cells[0] == form_distinct_rows.cells[3]

    def test_inverse_round_trip(self, form_distinct_rows):
        fwd_r, fwd_c = [2, 0, 3, 1], [1, 3, 0, 2]
        inv_r = [fwd_r.index(i) for i in range(4)]
        inv_c = [fwd_c.index(j) for j in range(4)]
        g = permute_tableau(form_distinct_rows, fwd_r, fwd_c)
        assert permute_tableau(g, inv_r, inv_c) == form_distinct_rows

    def test_bad_permutation(self, corr_2_3_3):
        with pytest.raises(ParameterError):
            permute_tableau(corr_2_3_3, [0, 0, 1, 2], [0, 1, 2, 3])

    def test_double_transpose(self, corr_2_3_3):
        assert transpose_tableau(transpose_tableau(corr_2_3_3)) == corr_2_3_3

    def test_transpose_cell(self):
        h = generate_correspondence(2, 1, 2)
        t = transpose_tableau(h)
        assert t.rows == h.cols and t.cols == h.rows
        for i, j in product(range(h.rows), range(h.cols)):
            assert t.cells[j][i] == h.cells[i][j]


class TestValidation:
    def test_too_few_candidates(self):
        with pytest.raises(ParameterError):
            Form(candidates=1, cells=((0,),))

    def test_ragged(self):
        with pytest.raises(ParameterError):
            Form(candidates=2, cells=((0, 1), (0,)))

    def test_out_of_range_candidate(self):
        with pytest.raises(ParameterError):
            Form(candidates=2, cells=((0, 2),))

    def test_empty_cell_set(self):
        with pytest.raises(ParameterError):
            Correspondence(candidates=2, cells=((frozenset(), frozenset({0})),))

    def test_empty_matrix(self):
        with pytest.raises(ParameterError):
            Form(candidates=2, cells=())


class TestDefaultNames:
    def test_alphabet(self):
        names = default_names(26)
        assert names[0] == "a" and names[25] == "z"

    def test_rollover(self):
        assert default_names(28)[26:] == ["aa", "ab"]

    def test_unique(self):
        names = default_names(60)
        assert len(set(names)) == 60
