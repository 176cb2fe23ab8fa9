"""Equality certificates and constructive symmetry witnesses."""

import random

import pytest

from relu_fiber import (
    DimensionError,
    MirroredCertificate,
    PreconditionError,
    WidthCapError,
    ZeroCertificate,
    absorb_zero_row,
    act,
    collapse_pair,
    equivalent,
    equivalent_k1,
    evaluate,
    flip,
    flip_subsets,
    make_parameter,
    minimal_form,
    ominus,
)
from relu_fiber.fibre import random_element
from conftest import F1, F2, T3, equivalent_pair_1d, rand_parameter, structured_parameter


class TestEquivalentK1:
    def test_worked_pair_mirrored(self):
        cert = equivalent_k1(F1, F2)
        assert isinstance(cert, MirroredCertificate)
        assert len(cert.pairs) == 3
        assert cert.sum_a == (0, 0)
        assert cert.sum_b_plus_c == 0

    def test_orbit_members_reduce_to_zero(self):
        rng = random.Random(89)
        for _ in range(50):
            p = rand_parameter(rng, 2, 4, 1)
            q = act(random_element(rng, 4), p)
            assert isinstance(equivalent_k1(p, q), ZeroCertificate)

    def test_shifted_constant_fails(self):
        shifted = make_parameter(2, 3, 1, [["1", "1", "1"]], F1.A, F1.b, ["-5"])
        assert equivalent_k1(F1, shifted) is None
        diff = minimal_form(ominus(F1, shifted))
        assert all(x == 0 for x in diff.u) and diff.constant == -1

    def test_widths_may_differ(self):
        rng = random.Random(97)
        p = rand_parameter(rng, 2, 3, 1)
        padded = make_parameter(
            2, 4, 1,
            [[*map(str, (x for x in p.M[0])), "0"]],
            [*([[str(x) for x in row] for row in p.A]), ["5", "7"]],
            [*map(str, p.b), "3"],
            [str(p.c[0])],
        )
        assert equivalent_k1(p, padded) is not None

    def test_certificates_are_sound_at_random_points(self):
        rng = random.Random(199)
        pairs = [(F1, F2)]
        for _ in range(10):
            p = rand_parameter(rng, 2, 4, 1)
            pairs.append((p, act(random_element(rng, 4), p)))
        for _ in range(10):
            p = structured_parameter(rng, 3, 4, 1)
            pairs.append((p, minimal_form(p).as_parameter()))
        for p1, p2 in pairs:
            assert equivalent_k1(p1, p2) is not None
            for _ in range(50):
                x = tuple(rng.randint(-200, 200) for _ in range(p1.m))
                assert evaluate(p1, x) == evaluate(p2, x)

    def test_zero_certificate_means_equal_minimal_forms(self):
        rng = random.Random(211)
        for _ in range(50):
            p1, p2 = equivalent_pair_1d(rng)
            cert = equivalent_k1(p1, p2)
            assert cert is not None
            if isinstance(cert, ZeroCertificate):
                assert minimal_form(p1) == minimal_form(p2)
            else:
                assert minimal_form(p1) != minimal_form(p2)

    def test_symmetry(self):
        rng = random.Random(101)
        for _ in range(50):
            p1, p2 = equivalent_pair_1d(rng)
            assert equivalent_k1(p1, p2) is not None
            assert equivalent_k1(p2, p1) is not None
        for _ in range(50):
            a = rand_parameter(rng, 2, 3, 1)
            b = rand_parameter(rng, 2, 3, 1)
            assert (equivalent_k1(a, b) is None) == (equivalent_k1(b, a) is None)


class TestEquivalentGeneralK:
    def test_relabeled_outputs(self):
        rng = random.Random(103)
        p = rand_parameter(rng, 2, 3, 2)
        q = act(random_element(rng, 3), p)
        ok, certs = equivalent(p, q)
        assert ok and len(certs) == 2

    def test_stacked_worked_pair(self):
        # width-6 hidden layer holding both triples; one parameter routes
        # output 2 through the first triple, the other through the second
        A = F1.A + F2.A
        b = F1.b + F2.b
        p = make_parameter(2, 6, 2, [[1, 1, 1, 0, 0, 0], [1, 1, 1, 0, 0, 0]], A, b, [-6, -6])
        q = make_parameter(2, 6, 2, [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]], A, b, [-6, -10])
        ok, certs = equivalent(p, q)
        assert ok
        assert isinstance(certs[0], ZeroCertificate)
        assert isinstance(certs[1], MirroredCertificate)

    def test_mismatched_constant_fails_one_output(self):
        p = make_parameter(2, 2, 2, [["1", "0"], ["0", "1"]], [["1", "0"], ["0", "1"]], ["0", "0"], ["0", "0"])
        q = make_parameter(2, 2, 2, [["1", "0"], ["0", "1"]], [["1", "0"], ["0", "1"]], ["0", "0"], ["0", "1"])
        ok, certs = equivalent(p, q)
        assert not ok
        assert certs[0] is not None and certs[1] is None

    def test_k_mismatch(self):
        rng = random.Random(1)
        with pytest.raises(DimensionError):
            equivalent(rand_parameter(rng, 2, 2, 1), rand_parameter(rng, 2, 2, 2))


class TestFlip:
    def test_worked_flip_hits_partner(self):
        assert flip(F1, [0, 1, 2]) == F2

    def test_involution(self):
        rng = random.Random(107)
        for _ in range(20):
            p, _ = equivalent_pair_1d(rng)
            subsets = flip_subsets(p)
            for s in subsets[:3]:
                assert flip(flip(p, s), s) == p

    def test_residual_reported(self):
        with pytest.raises(PreconditionError) as err:
            flip(F1, [0, 1])
        assert "(0, 1)" in str(err.value)

    def test_empty_subset_rejected(self):
        with pytest.raises(PreconditionError):
            flip(F1, [])


class TestFlipSubsets:
    def test_worked_example(self):
        assert flip_subsets(F1) == [(0, 1, 2)]

    def test_zero_linear_part_singleton(self):
        p = make_parameter(2, 2, 1, [["3", "1"]], [["0", "0"], ["1", "0"]], ["5", "0"], ["0"])
        assert (0,) in flip_subsets(p)

    def test_width_cap_refusal(self):
        rng = random.Random(109)
        p = rand_parameter(rng, 1, 6, 1)
        with pytest.raises(WidthCapError):
            flip_subsets(p, width_cap=5)

    def test_flips_preserve_realization(self):
        rng = random.Random(113)
        for _ in range(20):
            p, _ = equivalent_pair_1d(rng)
            for s in flip_subsets(p):
                q = flip(p, s)
                for _ in range(10):
                    x = (rng.randint(-50, 50),)
                    assert evaluate(q, x) == evaluate(p, x)

    def test_shortlex_order(self):
        rng = random.Random(127)
        for _ in range(20):
            p = structured_parameter(rng, 1, 5, 1)
            subsets = flip_subsets(p)
            assert subsets == sorted(subsets, key=lambda s: (len(s), s))


class TestCollapseAndAbsorb:
    def test_collapse_scaled_rows(self):
        p = make_parameter(1, 2, 1, [["1", "1"]], [["1"], ["2"]], ["1", "2"], ["0"])
        q = collapse_pair(p, 0, 1)
        assert q.M == ((3, 0),)
        from relu_fiber import exact_equal_1d

        assert exact_equal_1d(p, q)

    def test_collapse_identical_rows_adds_weights(self):
        p = make_parameter(1, 2, 1, [["2", "5"]], [["1"], ["1"]], ["0", "0"], ["0"])
        q = collapse_pair(p, 0, 1)
        assert q.M == ((7, 0),)

    def test_collapse_requires_proportional_rows(self):
        with pytest.raises(PreconditionError):
            collapse_pair(F1, 0, 1)

    def test_absorb_positive_bias(self):
        q = absorb_zero_row(T3, 2)
        assert q.c == (4,)
        assert q.M == ((1, 1, 0),)
        assert q.b[2] == 0

    def test_absorb_nonpositive_bias_keeps_constant(self):
        p = make_parameter(2, 2, 1, [["1", "4"]], [["1", "0"], ["0", "0"]], ["0", "-3"], ["9"])
        q = absorb_zero_row(p, 1)
        assert q.c == (9,)
        assert q.M == ((1, 0),)

    def test_absorb_requires_zero_linear_part(self):
        with pytest.raises(PreconditionError):
            absorb_zero_row(F1, 0)
