"""q-Pochhammer, Gaussian binomials, characters, partial thetas, products."""

import pytest

from qfish.qseries import (
    chi_t,
    mean_value_zero,
    partial_theta,
    pochhammer,
    q_binomial,
    quintiple_sides,
    theta_spec_t,
    torus_product,
)
from qfish.series import IntSeries, first_difference, poly_divides


def poly(*coeffs, min_exp=0, order=None):
    return IntSeries.make(min_exp, coeffs, order)


class TestPochhammer:
    def test_qq3(self):
        assert pochhammer(1, 3) == poly(1, -1, -1, 0, 1, 1, -1)

    def test_vanishes_at_unity_factor(self):
        assert pochhammer(1 - 2, 2).is_zero()

    def test_empty_product(self):
        assert pochhammer(1, 0) == IntSeries.one()

    def test_laurent_base(self):
        got = pochhammer(-1, 2)  # (1 - q^-1)(1 - 1) = 0
        assert got.is_zero()
        got = pochhammer(-2, 2)  # (1 - q^-2)(1 - q^-1)
        one_minus = lambda e: IntSeries.one() - IntSeries.monomial(e)
        assert got == one_minus(-2) * one_minus(-1)


class TestQBinomial:
    def test_four_choose_two(self):
        # oracle: expand (q)_4 / ((q)_2 (q)_2) by exact division
        num = pochhammer(1, 4)
        den = pochhammer(1, 2) * pochhammer(1, 2)
        wit = poly_divides(den, num)
        assert wit.divides and wit.unit_exp == 0
        assert q_binomial(4, 2) == wit.quotient
        assert q_binomial(4, 2) == poly(1, 1, 2, 1, 1)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_empty_selection(self, n):
        assert q_binomial(n, 0) == IntSeries.one()

    def test_out_of_range(self):
        assert q_binomial(1, 2).is_zero()
        assert q_binomial(3, -1).is_zero()
        assert q_binomial(-2, 0).is_zero()
        assert q_binomial(-2, 1).is_zero()

    @pytest.mark.parametrize("n", range(0, 13))
    def test_symmetry_degree_positivity(self, n):
        for k in range(0, n + 1):
            b = q_binomial(n, k)
            assert b == q_binomial(n, n - k)
            assert all(c >= 0 for c in b.coeffs)
            assert b.degree == k * (n - k)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_q_pascal(self, n):
        for k in range(0, n + 1):
            rhs = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
            assert q_binomial(n, k) == rhs

    @pytest.mark.parametrize("n,k", [(5, 2), (8, 3), (10, 5)])
    def test_division_oracle(self, n, k):
        wit = poly_divides(pochhammer(1, n - k) * pochhammer(1, k), pochhammer(1, n))
        assert wit.divides
        assert q_binomial(n, k) == wit.quotient


class TestChi:
    def test_t2_values(self):
        c = chi_t(2)
        assert c.period == 24
        assert c(5) == 1 and c(19) == 1 and c(11) == -1 and c(13) == -1
        assert c(6) == 0

    def test_t3_support(self):
        c = chi_t(3)
        assert c.period == 48
        assert {r for r in range(48) if c(r) == 1} == {13, 35}
        assert {r for r in range(48) if c(r) == -1} == {19, 29}

    def test_t1_is_conductor_12_character(self):
        c = chi_t(1)
        assert c.period == 12
        assert {r for r in range(12) if c(r) == 1} == {1, 11}
        assert {r for r in range(12) if c(r) == -1} == {5, 7}

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_exactly_four_support_points(self, t):
        c = chi_t(t)
        vals = [c(r) for r in range(c.period)]
        assert vals.count(1) == 2 and vals.count(-1) == 2


class TestThetaSpec:
    def test_parameters(self):
        s2 = theta_spec_t(2, 0)
        assert (s2.a, s2.b) == (25, 48)
        s3 = theta_spec_t(3, 1)
        assert (s3.a, s3.b) == (169, 96)

    def test_integral_exponent_example(self):
        assert theta_spec_t(2, 0).exponent(11) == 2

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_support_condition_over_period(self, t):
        spec = theta_spec_t(t, 0)
        for n in range(spec.char.period):
            if spec.char(n):
                assert (n * n - spec.a) % spec.b == 0


class TestPartialTheta:
    def test_t2_nu1_order_18(self):
        # enumerate n = 5, 11, 13, 19, 29 by hand
        got = partial_theta(theta_spec_t(2, 1), 18)
        assert got == poly(5, 0, -11, -13, 0, 0, 0, 19, *([0] * 9), 29, order=18)

    def test_t2_nu0_order_8(self):
        assert partial_theta(theta_spec_t(2, 0), 8) == poly(1, 0, -1, -1, 0, 0, 0, 1, order=8)

    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_constant_term(self, t):
        # the first support point n0 = 2^(t+1) - 3 has exponent 0 and sign +1
        got = partial_theta(theta_spec_t(t, 0), 2)
        assert got.coeff(0) == 1

    def test_oracle_brute_force(self):
        spec = theta_spec_t(3, 1)
        order = 40
        acc = {}
        for n in range(0, spec.char.period * 10):
            c = spec.char(n)
            if c and (n * n - spec.a) // spec.b < order:
                e = (n * n - spec.a) // spec.b
                acc[e] = acc.get(e, 0) + c * n
        got = partial_theta(spec, order)
        for e in range(order):
            assert got.coeff(e) == acc.get(e, 0)


class TestMeanValueZero:
    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    @pytest.mark.parametrize("m", range(1, 13))
    def test_grid(self, t, m):
        assert mean_value_zero(theta_spec_t(t, 0), m)

    def test_integer_cancellation(self):
        # M = 1: plain signs cancel over one period
        assert mean_value_zero(theta_spec_t(2, 0), 1)


class TestTorusProduct:
    def test_t2_order_11(self):
        got = torus_product(2, 11)
        assert got == poly(1, 0, -1, -1, 0, 0, 0, 1, 0, 0, 0, order=11)

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_constant_term(self, t):
        assert torus_product(t, 3).coeff(0) == 1

    @pytest.mark.parametrize("t", [2, 3])
    def test_equals_partial_theta_to_60(self, t):
        lhs = partial_theta(theta_spec_t(t, 0), 60)
        assert first_difference(lhs, torus_product(t, 60)) is None

    def test_t2_naive_product_oracle(self):
        order = 30
        naive = IntSeries.one(order)
        for e in list(range(3, order, 8)) + list(range(5, order, 8)) + \
                list(range(8, order, 8)) + list(range(2, order, 16)) + \
                list(range(14, order, 16)):
            naive = naive.mul_one_minus_qk(e)
        assert torus_product(2, order) == naive


class TestQuintuple:
    @pytest.mark.parametrize("t,order", [(2, 30), (3, 50)])
    def test_sides_agree(self, t, order):
        lhs, rhs = quintiple_sides(2 ** (t + 1), 2**t - 1, order)
        assert first_difference(lhs, rhs) is None

    def test_k0_term(self):
        lhs, _ = quintiple_sides(8, 3, 4)
        # k = 0 contributes 1 - q^3; k = +-1 terms start at exponent >= 4
        assert lhs.coeff(0) == 1 and lhs.coeff(3) == -1

    def test_unbounded_rejected(self):
        with pytest.raises(ValueError):
            quintiple_sides(0, 3, 10)
        with pytest.raises(ValueError):
            quintiple_sides(4, 9, 10)  # q - 2x exponent would be negative
