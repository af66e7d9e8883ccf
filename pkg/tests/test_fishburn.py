"""Fishburn coefficients, dissections, divisibility, and congruences."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfish.fishburn import (
    S_set,
    binom_congruence,
    congruence_j_range,
    dissection,
    divisibility_check,
    is_prime,
    straub_order_bound,
    verify_congruence,
    xi_coefficients,
    xi_series,
)
from qfish.qseries import theta_spec_t
from qfish.series import IntSeries, NotPolynomialError, substitute_one_minus_q
from qfish.torus import kz_full_polynomial, torus_params


class TestXi:
    def test_classical_values(self):
        assert xi_coefficients(1, 6) == [1, 1, 2, 5, 15, 53]

    def test_t2_values(self):
        assert xi_coefficients(2, 6) == [1, 3, 11, 50, 280, 1890]

    def test_t3_values(self):
        assert xi_coefficients(3, 6) == [1, 7, 49, 420, 4515, 59367]

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_against_full_polynomial_substitution(self, t):
        # dual route: engine vs direct q -> 1-q on the exact partial sum
        count = 9
        p = torus_params(t)
        full = kz_full_polynomial(p, count + 4)
        direct = substitute_one_minus_q(full, count)
        assert list(direct.coeffs) == xi_series(t, count + 4, count)

    @pytest.mark.parametrize("t", [2, 3])
    def test_guard_stability(self, t):
        assert xi_series(t, 16 + 4, 16) == xi_series(t, 16 + 9, 16)

    @pytest.mark.parametrize("t", [2, 3])
    @pytest.mark.parametrize("k", [10, 30])
    def test_partial_sum_bound_stability(self, t, k):
        # coefficients of q^j in the 1-q expansion of the N-th partial sum
        # agree between N = K and N = K + 5 for j <= K
        assert xi_series(t, k, k) == xi_series(t, k + 5, k)

    def test_count_validation(self):
        with pytest.raises(ValueError):
            xi_coefficients(2, 0)


class TestDissection:
    def test_by_definition(self):
        d = dissection(IntSeries.make(0, [1, 2, 3, 4]), 2)
        assert d.pieces[0] == IntSeries.make(0, [1, 3])
        assert d.pieces[1] == IntSeries.make(0, [2, 4])

    def test_negative_exponents(self):
        # q^-1 lands in class s-1 at power -1
        d = dissection(IntSeries.monomial(-1), 5)
        assert d.pieces[4] == IntSeries.monomial(-1)
        assert d.reconstruct() == IntSeries.monomial(-1)

    def test_truncated_rejected(self):
        with pytest.raises(NotPolynomialError):
            dissection(IntSeries.make(0, [1, 1], 5), 2)

    @given(
        st.integers(-6, 6),
        st.lists(st.integers(-9, 9), min_size=0, max_size=12),
        st.integers(2, 7),
    )
    @settings(max_examples=120, deadline=None)
    def test_round_trip(self, min_exp, coeffs, s):
        p = IntSeries.make(min_exp, coeffs)
        assert dissection(p, s).reconstruct() == p


class TestSSet:
    @pytest.mark.parametrize(
        "t,s,expect",
        [
            (2, 5, {0, 2, 3}),
            (2, 17, {0, 2, 3, 4, 7, 8, 9, 11, 14}),
            (3, 7, {0, 2, 3, 4}),
            (3, 13, {0, 2, 5, 6, 7, 8, 11}),
        ],
    )
    def test_printed_sets(self, t, s, expect):
        assert S_set(theta_spec_t(t, 0), s) == expect

    def test_s_equal_one(self):
        assert S_set(theta_spec_t(2, 0), 1) == {0}

    def test_classical_j_ranges(self):
        # the S-set rule at t=1 reproduces the classical congruence ranges
        assert congruence_j_range(1, 5) == [1, 2]
        assert congruence_j_range(1, 7) == [1]
        assert congruence_j_range(1, 11) == [1, 2, 3]


class TestDivisibility:
    def test_t2_s5_n9(self):
        rep = divisibility_check(2, 5, 9)
        assert rep.lam == 2
        assert [e["i"] for e in rep.entries] == [1, 4]
        assert rep.passed

    @pytest.mark.parametrize("n_index", [4, 9, 14])
    def test_t2_s5_progression(self, n_index):
        assert divisibility_check(2, 5, n_index).passed

    def test_t1_classical(self):
        rep = divisibility_check(1, 5, 9)
        assert rep.passed
        assert set(e["i"] for e in rep.entries) == {3, 4}  # S = {0, 1, 2}

    def test_lambda_zero_trivial(self):
        rep = divisibility_check(2, 5, 3)
        assert rep.lam == 0 and rep.passed

    def test_odd_t_laurent_pieces(self):
        rep = divisibility_check(3, 7, 13)
        assert rep.passed
        assert [e["i"] for e in rep.entries] == [1, 5, 6]
        # Laurent dissection: at least one piece needs a monomial unit
        assert any(e["unit_exp"] != 0 for e in rep.entries)


class TestCongruence:
    def test_t2_p5_printed_value(self):
        assert xi_coefficients(2, 5)[4] == 280
        rep = verify_congruence(2, 5, 1, 1)
        assert rep.passed and rep.j_range == (1,)

    def test_t2_p17(self):
        rep = verify_congruence(2, 17, 1, 1)
        assert rep.passed and rep.j_range == (1, 2)

    def test_t1_p5_values(self):
        rep = verify_congruence(1, 5, 1, 1)
        assert rep.passed
        by_j = {e["j"]: e["xi"] for e in rep.entries}
        assert by_j == {1: 15, 2: 5}

    def test_prime_validation(self):
        with pytest.raises(ValueError):
            verify_congruence(2, 4, 1, 1)
        with pytest.raises(ValueError):
            verify_congruence(2, 3, 1, 1)

    def test_vacuous_branch(self, monkeypatch):
        import qfish.fishburn as fb

        monkeypatch.setattr(fb, "S_set", lambda spec, s: {s - 1})
        rep = verify_congruence(2, 5, 1, 1)
        assert rep.vacuous and rep.passed and rep.entries == ()

    def test_scan_beyond_range(self):
        rep = verify_congruence(2, 5, 1, 1, scan_all_j=True)
        assert rep.passed  # pass judged only on the claimed range
        assert {e["j"] for e in rep.scanned} == {2, 3, 4}

    def test_r3_instance_t2(self):
        # beyond the acceptance gate: one r = 3 case stays desk-sized at t = 2
        rep = verify_congruence(2, 5, 3, 1)
        assert rep.passed
        assert rep.entries[0]["index"] == 124

    def test_failure_detected(self, monkeypatch):
        import qfish.fishburn as fb

        bad = list(xi_coefficients(2, 5))
        bad[4] += 1
        monkeypatch.setattr(fb, "xi_coefficients", lambda t, c: bad[:c])
        rep = verify_congruence(2, 5, 1, 1)
        assert not rep.passed


class TestStraub:
    def test_p5_r1_n2_residue(self):
        # square 5q - 10q^2 + 10q^3 - 5q^4 + q^5 and reduce mod 5: only q^10
        base = IntSeries.one() - IntSeries.make(
            0, [(-1 if i & 1 else 1) * math.comb(5, i) for i in range(6)]
        )
        sq = base * base
        residues = [sq.coeff(e) % 5 for e in range(sq.degree + 1)]
        assert residues == [0] * 10 + [1]
        assert straub_order_bound(5, 1, 2)

    def test_p5_r2_n2(self):
        assert straub_order_bound(5, 2, 2)

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_r1_n1(self, p):
        assert straub_order_bound(p, 1, 1)

    @pytest.mark.parametrize("p", [5, 7])
    @pytest.mark.parametrize("r", [1, 2])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_grid(self, p, r, n):
        assert straub_order_bound(p, r, n)


class TestBinomCongruence:
    def test_examples(self):
        assert math.comb(8, 4) == 70
        assert binom_congruence(3, 1, 5, 1, 1, 1)
        assert binom_congruence(0, 0, 5, 1, 1, 1)  # comb(0, 4) = 0
        assert binom_congruence(0, 1, 7, 1, 1, 1)  # comb(7, 6) = 7

    def test_stated_grid(self):
        for t, p in ((2, 5), (3, 7)):
            sset = S_set(theta_spec_t(t, 0), p)
            jr = congruence_j_range(t, p)
            for r in (1, 2):
                for i in sorted(sset):
                    for j in jr:
                        for l in range(1, 7):
                            for m in (1, 2):
                                assert binom_congruence(i, l, p, r, m, j)


class TestIsPrime:
    def test_values(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
        ]
