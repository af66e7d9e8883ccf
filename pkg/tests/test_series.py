"""Exact series arithmetic: windows, units, substitution, named products."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfish.series import (
    IntSeries,
    NonUnitError,
    NotPolynomialError,
    TruncationError,
    divisor_sum_series,
    euler_product,
    first_difference,
    invert_unit,
    poly_divides,
    progression_product,
    series_arith,
    substitute_one_minus_q,
)


def poly(*coeffs, min_exp=0, order=None):
    return IntSeries.make(min_exp, coeffs, order)


small_series = st.builds(
    lambda min_exp, coeffs: IntSeries.make(min_exp, coeffs),
    st.integers(-4, 4),
    st.lists(st.integers(-9, 9), max_size=7),
)


class TestArith:
    def test_product_of_first_three_factors(self):
        # direct hand expansion of (1-q)(1-q^2)(1-q^3)
        prod = poly(1, -1) * poly(1, 0, -1) * poly(1, 0, 0, -1)
        assert prod == poly(1, -1, -1, 0, 1, 1, -1)

    def test_additive_identity(self):
        a = poly(3, 0, -2, min_exp=-1, order=4)
        assert series_arith(a, IntSeries.zero(), "add") == a

    def test_shift(self):
        assert series_arith(poly(1, 1), None, "shift", k=-2) == poly(1, 1, min_exp=-2)

    def test_mul_order_rule(self):
        a = poly(1, 2, order=4)           # window [0, 4)
        b = poly(1, 1, min_exp=2, order=5)  # window [2, 5)
        c = a * b
        assert c.order == min(4 + 2, 5 + 0)
        assert c.min_exp == 2

    def test_orders_never_widen(self):
        a = poly(1, 1, order=3)
        b = poly(1, 1, order=9)
        assert (a + b).order == 3
        assert (a - b).order == 3

    def test_coeff_beyond_order_raises(self):
        a = poly(1, 1, order=2)
        with pytest.raises(TruncationError):
            a.coeff(2)

    @given(small_series, small_series, small_series)
    @settings(max_examples=150, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestInvert:
    def test_geometric(self):
        inv = invert_unit(poly(1, -1, order=5))
        assert inv == poly(1, 1, 1, 1, 1, order=5)

    def test_identity(self):
        assert invert_unit(IntSeries.one(7)) == IntSeries.one(7)

    def test_fibonacci(self):
        # long division oracle: 1/(1 - q - q^2) has Fibonacci coefficients
        inv = invert_unit(poly(1, -1, -1, order=6))
        fib = [1, 1]
        while len(fib) < 6:
            fib.append(fib[-1] + fib[-2])
        assert list(inv.coeffs) == fib

    def test_non_unit_rejected(self):
        with pytest.raises(NonUnitError):
            invert_unit(poly(2, 1, order=4))
        with pytest.raises(NonUnitError):
            invert_unit(poly(1, 1, min_exp=1, order=4))

    @given(st.lists(st.integers(-5, 5), min_size=0, max_size=6),
           st.sampled_from([1, -1]))
    @settings(max_examples=80, deadline=None)
    def test_two_sided_inverse(self, tail, unit):
        a = IntSeries.make(0, [unit] + tail, 8)
        inv = invert_unit(a)
        assert a * inv == IntSeries.one(8)
        assert inv * a == IntSeries.one(8)


class TestSubstitute:
    def test_degree_one(self):
        assert substitute_one_minus_q(poly(0, 1), 4) == poly(1, -1, order=4)

    def test_inverse_power(self):
        # q^-1 |-> (1-q)^-1 = geometric series
        assert substitute_one_minus_q(IntSeries.monomial(-1), 4) == poly(1, 1, 1, 1, order=4)

    def test_binomial_oracle(self):
        # 1 + (1-q) + (1-q)^2 = 3 - 3q + q^2
        assert substitute_one_minus_q(poly(1, 1, 1), 5) == poly(3, -3, 1, order=5)

    def test_out_order_beyond_window_rejected(self):
        with pytest.raises(TruncationError):
            substitute_one_minus_q(poly(1, 1, order=3), 5)

    @given(st.integers(0, 3), st.lists(st.integers(-6, 6), max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_involution_on_polynomials(self, min_exp, coeffs):
        # q -> 1-q is an involution of Z[q]; negative exponents leave the
        # polynomial ring and are excluded.
        a = IntSeries.make(min_exp, coeffs)
        order = (min_exp + len(coeffs) + 2) * 2
        twice = substitute_one_minus_q(substitute_one_minus_q(a, order), order)
        assert first_difference(twice, a) is None


class TestNamedSeries:
    def test_euler_product_order_13(self):
        assert euler_product(13) == poly(
            1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, order=13
        )

    def test_euler_product_order_1(self):
        assert euler_product(1) == IntSeries.one(1)

    def test_euler_order_6_direct_product(self):
        assert euler_product(6) == poly(1, -1, -1, 0, 0, 1, order=6)

    def test_euler_equals_direct_product_every_order(self):
        for order in range(1, 61):
            direct = IntSeries.one(order)
            for k in range(1, order + 1):
                direct = direct.mul_one_minus_qk(k)
            assert euler_product(order) == direct, order

    def test_divisor_sum(self):
        def d(n):
            return sum(1 for k in range(1, n + 1) if n % k == 0)

        s = divisor_sum_series(7)
        assert s.min_exp == 1  # the q^0 coefficient is zero
        assert [s.coeff(n) for n in range(7)] == [0] + [d(n) for n in range(1, 7)]
        assert d(1) == 1
        assert divisor_sum_series(13).coeff(12) == 6  # divisors 1,2,3,4,6,12

    def test_progression_product_matches_naive(self):
        pairs = [(2, 3), (1, 5)]
        order = 25
        naive = IntSeries.one(order)
        for start, step in pairs:
            e = start
            while e < order:
                naive = naive.mul_one_minus_qk(e)
                e += step
        assert progression_product(pairs, order) == naive


class TestPolyDivides:
    def test_constructed_multiple(self):
        d = poly(1, -1) * poly(1, 0, -1)
        p = d * poly(1, 5)
        wit = poly_divides(d, p)
        assert wit.divides and wit.quotient == poly(1, 5) and wit.unit_exp == 0

    def test_obvious_nondivisor(self):
        wit = poly_divides(poly(1, -1), poly(1, 1))
        assert not wit.divides
        assert wit.remainder is not None and not wit.remainder.is_zero()

    def test_laurent_unit(self):
        # q^-1 - 1 = (1 - q) * 1 * q^-1
        wit = poly_divides(poly(1, -1), poly(1, -1, min_exp=-1))
        assert wit.divides and wit.unit_exp == -1
        recon = poly(1, -1) * wit.quotient * IntSeries.monomial(wit.unit_exp)
        assert recon == poly(1, -1, min_exp=-1)

    def test_truncated_input_rejected(self):
        with pytest.raises(NotPolynomialError):
            poly_divides(poly(1, -1), poly(1, 1, order=5))

    @given(small_series, st.lists(st.integers(-4, 4), min_size=1, max_size=5))
    @settings(max_examples=80, deadline=None)
    def test_product_always_divides(self, h, dcoeffs):
        d = IntSeries.make(0, dcoeffs)
        if d.is_zero():
            return
        p = d * h
        wit = poly_divides(d, p)
        assert wit.divides
        recon = d * wit.quotient * IntSeries.monomial(wit.unit_exp)
        assert recon == p


class TestWindowSemantics:
    def test_zero_window(self):
        z = IntSeries.zero(5)
        assert z.is_zero() and z.order == 5

    def test_normalization_strips_leading_zeros(self):
        a = IntSeries.make(0, [0, 0, 3], None)
        assert a.min_exp == 2 and a.coeffs == (3,)

    def test_truncate_never_widens(self):
        a = poly(1, 1, order=3)
        assert a.truncate(10).order == 3
