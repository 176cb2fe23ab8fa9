"""Minimal forms, zero-factor ranks, reductions."""

import random
from fractions import Fraction

import pytest

from relu_fiber import (
    DimensionError,
    ZeroReduction,
    act,
    evaluate,
    minimal_form,
    zero_factor_rank,
    zero_factor_reduce,
)
from relu_fiber.fibre import random_element
from relu_fiber.rational import aff_row, zero_row
from conftest import F1, T1, T2, T3, T4, rand_parameter, structured_parameter


class TestTableRows:
    def test_t1_all_dead(self):
        mf = minimal_form(T1)
        assert mf.u == (0, 0, 0)
        assert all(r.is_zero() for r in mf.rows)
        assert mf.constant == T1.c[0]

    def test_t2_merge_and_cancel(self):
        mf = minimal_form(T2)
        assert mf.u == (1, -1, 0)
        assert mf.rows[0] == aff_row([11, 11, 11], 0)
        assert mf.rows[1] == aff_row([5, 2, 1], 0)
        assert mf.rows[2].is_zero()
        assert mf.constant == T2.c[0]

    def test_t3_absorbs_constant_neuron(self):
        mf = minimal_form(T3)
        assert mf.u == (1, 1, 0)
        assert mf.rows[0] == aff_row([2, 4, 0], 7)
        assert mf.rows[1] == aff_row([1, 1, 3], 2)
        assert mf.constant == 4

    def test_t4_normalized_signs(self):
        # the sign vector stays in {0, +1, -1}; rows carry the magnitudes
        mf = minimal_form(T4)
        assert mf.u == (1, 1, -1)
        assert mf.rows[0] == aff_row([1, 7, 3], 2)
        assert mf.rows[1] == aff_row([0, 36, 0], 63)
        assert mf.rows[2] == aff_row([10, 5, 15], 45)
        assert mf.constant == 8

    def test_f1_sorted_rows(self):
        mf = minimal_form(F1)
        assert mf.u == (1, 1, 1)
        assert mf.rows == (aff_row([1, 1], -2), aff_row([0, -1], -1), aff_row([-1, 0], -1))
        assert mf.constant == -6

    def test_requires_single_output(self):
        rng = random.Random(1)
        with pytest.raises(DimensionError):
            minimal_form(rand_parameter(rng, 2, 2, 2))


class TestMinimalFormProperties:
    def test_realization_preserved(self):
        rng = random.Random(61)
        for _ in range(50):
            p = structured_parameter(rng, rng.randint(1, 4), rng.randint(1, 6), 1)
            q = minimal_form(p).as_parameter()
            for _ in range(20):
                x = tuple(rng.randint(-50, 50) for _ in range(p.m))
                assert evaluate(p, x) == evaluate(q, x)

    def test_idempotent(self):
        rng = random.Random(67)
        for _ in range(100):
            p = structured_parameter(rng, rng.randint(1, 3), rng.randint(1, 5), 1)
            mf = minimal_form(p)
            assert minimal_form(mf.as_parameter()) == mf

    def test_group_invariance(self):
        rng = random.Random(71)
        for _ in range(200):
            p = structured_parameter(rng, rng.randint(1, 4), rng.randint(1, 6), 1)
            g = random_element(rng, p.n)
            assert minimal_form(act(g, p)) == minimal_form(p)

    def test_rewrite_moves_share_minimal_form(self):
        # inert neuron deletion, row merging, constant absorption
        from relu_fiber import absorb_zero_row, collapse_pair
        from relu_fiber.param import replace_row

        rng = random.Random(73)
        for _ in range(50):
            p = structured_parameter(rng, 2, 4, 1)
            from relu_fiber.group import stabilizer_rows

            rows_desc = stabilizer_rows(p.A, p.b)
            for i, j, _lam in rows_desc.pairs:
                assert minimal_form(collapse_pair(p, i, j)) == minimal_form(p)
            for i in range(p.n):
                if all(x == 0 for x in p.A[i]):
                    assert minimal_form(absorb_zero_row(p, i)) == minimal_form(p)
                if all(x == 0 for x in p.out_column(i)):
                    assert minimal_form(replace_row(p, i, zero_row(p.m))) == minimal_form(p)


class TestRankAndReduce:
    def test_ranks_of_table_rows(self):
        assert zero_factor_rank(T1) == 3
        assert zero_factor_rank(T2) == 1
        assert zero_factor_rank(T3) == 1
        assert zero_factor_rank(T4) == 0
        assert zero_factor_rank(F1) == 0

    def test_full_cancellation_leaves_constant(self):
        reduced = zero_factor_reduce(T1)
        assert reduced == ZeroReduction(Fraction(5))

    def test_t2_reduces_to_width_two(self):
        reduced = zero_factor_reduce(T2)
        assert reduced.n == 2
        assert reduced.M == ((1, -1),)
        assert reduced.A == ((11, 11, 11), (5, 2, 1))
        assert reduced.b == (0, 0)
        assert reduced.c == (T2.c[0],)

    def test_reduce_fixes_reduced_parameters(self):
        reduced = zero_factor_reduce(T2)
        assert zero_factor_reduce(reduced) == reduced

    def test_reduction_has_no_zero_factors(self):
        rng = random.Random(79)
        for _ in range(50):
            p = structured_parameter(rng, 2, 5, 1)
            reduced = zero_factor_reduce(p)
            if isinstance(reduced, ZeroReduction):
                continue
            assert zero_factor_rank(reduced) == 0
            # surviving rows pairwise non-proportional
            from relu_fiber.rational import pos_ratio

            for i in range(reduced.n):
                for j in range(i + 1, reduced.n):
                    assert pos_ratio(reduced.row(i).vec, reduced.row(j).vec) is None

    def test_reduction_realizes_same_function(self):
        rng = random.Random(83)
        for _ in range(30):
            p = structured_parameter(rng, 2, 4, 1)
            reduced = zero_factor_reduce(p)
            for _ in range(10):
                x = tuple(rng.randint(-30, 30) for _ in range(2))
                want = evaluate(p, x)[0]
                if isinstance(reduced, ZeroReduction):
                    assert want == reduced.constant
                else:
                    assert evaluate(reduced, x)[0] == want
