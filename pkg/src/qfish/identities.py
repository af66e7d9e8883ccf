"""Structured verification of the finite q-series identities.

Every checker computes its two sides by independent routes (no shared
subexpressions beyond the base ring), compares them exactly on an honest
truncation window, and returns an IdentityReport carrying the window, the
verdict, and the first discrepancy if any.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .biseries import BiAccumulator, BiSeries, bi_first_difference
from .cyclotomic import cyc_eval
from .qseries import (
    partial_theta,
    pochhammer,
    theta_spec_t,
    torus_product,
    quintiple_sides,
)
from .series import (
    IntSeries,
    divisor_sum_series,
    euler_product,
    first_difference,
    invert_unit,
)
from .torus import (
    M_series,
    admissible_jvectors,
    b_n_t,
    colored_jones,
    H_multisum,
    H_theta,
    kz_at_root_of_unity,
    kz_inner_sum,
    torus_params,
)


@dataclass(frozen=True, slots=True)
class IdentityReport:
    name: str
    window: dict
    passed: bool
    first_discrepancy: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {
            "identity": self.name,
            "window": dict(self.window),
            "pass": self.passed,
        }
        if self.first_discrepancy is not None:
            out["first_discrepancy"] = dict(self.first_discrepancy)
        if self.details:
            out["details"] = {k: v for k, v in self.details.items()}
        return out


def _series_report(name: str, window: dict, lhs: IntSeries, rhs: IntSeries,
                   details: Optional[dict] = None) -> IdentityReport:
    d = first_difference(lhs, rhs)
    if d is None:
        return IdentityReport(name, window, True, None, details or {})
    exp, ca, cb = d
    return IdentityReport(
        name, window, False,
        {"exponent": exp, "lhs": ca, "rhs": cb},
        details or {},
    )


def _bi_report(name: str, window: dict, lhs: BiSeries, rhs: BiSeries,
               details: Optional[dict] = None) -> IdentityReport:
    d = bi_first_difference(lhs, rhs)
    if d is None:
        return IdentityReport(name, window, True, None, details or {})
    x, q, ca, cb = d
    return IdentityReport(
        name, window, False,
        {"x_exponent": x, "q_exponent": q, "lhs": ca, "rhs": cb},
        details or {},
    )


def _merge(name: str, window: dict, parts: list) -> IdentityReport:
    passed = all(r.passed for r in parts)
    first = next((r.first_discrepancy for r in parts if not r.passed), None)
    details = {r.name: ("pass" if r.passed else "fail") for r in parts}
    for r in parts:
        if not r.passed:
            details[r.name + "_discrepancy"] = r.first_discrepancy
    return IdentityReport(name, window, passed, first, details)


# -- difference equation and the theta/multisum match -------------------------


def _diff_rhs(t: int, f: BiSeries, x_bound: int, q_order: int) -> BiSeries:
    """1 - q^2 x^3 - q^(2^t-1) x^(2^t) + q^(3+2^t) x^(3+2^t)
    + q^(5*2^t-3) x^(3*2^t) f(q^2 x)."""
    p2 = 2**t
    acc = BiAccumulator(x_bound, q_order)
    acc.add(0, IntSeries.one(q_order))
    acc.add(3, IntSeries.monomial(2, -1, q_order))
    acc.add(p2, IntSeries.monomial(p2 - 1, -1, q_order))
    acc.add(3 + p2, IntSeries.monomial(3 + p2, 1, q_order))
    shifted = f.substitute_x_times_qk(2)
    for j in range(min(f.x_bound, x_bound - 3 * p2)):
        acc.add(3 * p2 + j, shifted.cols[j].shift(5 * p2 - 3))
    return acc.finish()


def verify_difference_equation(t: int, x_bound: int, q_order: int) -> IdentityReport:
    """Check that both forms of H_t satisfy the defining difference equation
    and that they agree with each other on the window."""
    p = torus_params(t)
    window = {"t": t, "x_bound": x_bound, "q_order": q_order}
    h_series = H_theta(p, x_bound, q_order)
    h_multi = H_multisum(p, x_bound, q_order)
    parts = [
        _bi_report("theta_form_difference_eq", window, h_series,
                   _diff_rhs(t, h_series, x_bound, q_order)),
        _bi_report("multisum_form_difference_eq", window, h_multi,
                   _diff_rhs(t, h_multi, x_bound, q_order)),
        _bi_report("theta_equals_multisum", window, h_series, h_multi),
    ]
    return _merge("difference_equation", window, parts)


def verify_rewrite2(t: int, x_bound: int, q_order: int) -> IdentityReport:
    """(1 - x) M_t(x, q) = sum_n b_{n,t}(q) x^n, both sides independently."""
    p = torus_params(t)
    window = {"t": t, "x_bound": x_bound, "q_order": q_order}
    lhs = M_series(p, x_bound, q_order).mul_one_minus_x()
    rhs = BiSeries.make(x_bound, q_order, [b_n_t(p, n, q_order) for n in range(x_bound)])
    return _bi_report("m_series_rewrite", window, lhs, rhs)


# -- the key identity ----------------------------------------------------------


def _b_sums(p, work: int, n_stop: Optional[int] = None):
    """(sum_n b_{n,t}, sum_n (n - h) b_{n,t}) truncated below work.

    Without an explicit stop, summation ends after 2m consecutive terms
    vanish on the window (no effective convergence rate is available, so
    callers double the cutoff and compare).
    """
    total_b = IntSeries.zero(work)
    total_w = IntSeries.zero(work)
    run = 0
    n = 0
    hard_cap = max(16 * work * p.m, 64)
    while True:
        if n_stop is not None:
            if n >= n_stop:
                break
        elif run >= 2 * p.m and n > p.h:
            break
        elif n > hard_cap:
            raise ArithmeticError("b_{n,t} sum failed to stabilize")
        bn = b_n_t(p, n, work)
        if bn.is_zero():
            run += 1
        else:
            run = 0
            total_b = total_b + bn
            total_w = total_w + bn.scale(n - p.h)
        n += 1
    return total_b, total_w, n


def verify_key_identity(t: int, q_order: int) -> IdentityReport:
    """The two-variable identity behind the partial-theta asymptotics,
    multiplied by 2 so both sides stay in Z[[q]]:

        P^(1)(q) - (2^(t+1)-3) * five_fold_product(q)
      = 2 [ s q^(-h') sum_n ((q)_n - (q)_inf) G_n(q)
          + s q^(-h') (q)_inf (sum_i q^i/(1-q^i)) sum_n b_{n,t}
          - s q^(-h') (q)_inf sum_n (n - h) b_{n,t} ],  s = (-1)^(h''+1).
    """
    p = torus_params(t)
    if p.t < 2:
        raise ValueError("the key identity needs t >= 2")
    window = {"t": t, "q_order": q_order}
    lhs = partial_theta(theta_spec_t(t, 1), q_order) - torus_product(t, q_order).scale(
        2 ** (t + 1) - 3
    )
    work = q_order + p.h_d
    eul = euler_product(work)
    s1 = IntSeries.zero(work)
    poch = IntSeries.one(work)
    for n in range(work + 1):  # (q)_n - (q)_inf = O(q^(n+1))
        if n:
            poch = poch.mul_one_minus_qk(n)
        diffp = poch - eul
        if diffp.is_zero() and n > 0:
            break
        s1 = s1 + diffp * kz_inner_sum(p, n, work)
    tb, tw, n_cut = _b_sums(p, work)
    tb2, tw2, _ = _b_sums(p, work, n_stop=2 * n_cut)
    cutoff_stable = (first_difference(tb, tb2) is None) and (first_difference(tw, tw2) is None)
    s2 = eul * divisor_sum_series(work) * tb
    s3 = eul * tw
    sigma = 1 if (p.h_dd + 1) % 2 == 0 else -1
    rhs_core = (s1 + s2).scale(sigma) + s3.scale(-sigma)
    rhs = rhs_core.shift(-p.h_d).scale(2)
    rep = _series_report("key_identity", window, lhs, rhs,
                         {"b_sum_cutoff": n_cut, "cutoff_doubling_stable": cutoff_stable})
    if not cutoff_stable and rep.passed:
        return IdentityReport(rep.name, rep.window, False, rep.first_discrepancy, rep.details)
    return rep


# -- theta = product, Slater ---------------------------------------------------


def verify_theta_product(t: int, q_order: int) -> IdentityReport:
    """P^(0)(q) = five-fold product, plus the bilateral reorganization:
    the same partial theta equals the quintiple-product bilateral sum."""
    p = torus_params(t)
    if p.t < 2:
        raise ValueError("t >= 2 required")
    window = {"t": t, "q_order": q_order}
    p0 = partial_theta(theta_spec_t(t, 0), q_order)
    tp = torus_product(t, q_order)
    bilateral, product5 = quintiple_sides(2 ** (t + 1), 2**t - 1, q_order)
    parts = [
        _series_report("partial_theta_equals_product", window, p0, tp),
        _series_report("partial_theta_equals_bilateral", window, p0, bilateral),
        _series_report("quintiple_product_sides", window, bilateral, product5),
    ]
    return _merge("theta_product", window, parts)


def _slater86(q_order: int) -> IdentityReport:
    """Slater's list (86): (q)_inf sum_n q^(2n(n+1))/(q)_{2n+1}
    = (q^3, q^5, q^8; q^8)_inf (q^2, q^14; q^16)_inf."""
    window = {"q_order": q_order}
    total = IntSeries.zero(q_order)
    n = 0
    while 2 * n * (n + 1) < q_order:
        inv = invert_unit(pochhammer(1, 2 * n + 1, q_order), q_order)
        total = total + inv.shift(2 * n * (n + 1)).truncate(q_order)
        n += 1
    lhs = euler_product(q_order) * total
    from .series import progression_product

    rhs = progression_product([(3, 8), (5, 8), (8, 8), (2, 16), (14, 16)], q_order)
    return _series_report("slater_86", window, lhs, rhs)


def _gen_slater(t: int, q_order: int) -> IdentityReport:
    """(q)_inf sign q^(-h') sum'_{jv} (-1)^(sum j) q^v / prod (q)_{j_l}
    equals the five-fold product."""
    p = torus_params(t)
    window = {"t": t, "q_order": q_order}
    work = q_order + p.h_d
    inv_cache: dict = {}

    def inv_poch(j: int) -> IntSeries:
        got = inv_cache.get(j)
        if got is None:
            got = invert_unit(pochhammer(1, j, work), work)
            inv_cache[j] = got
        return got

    j_cap = 2
    while j_cap * (j_cap - 1) // 2 < work:
        j_cap += 1
    total = IntSeries.zero(work)
    for jv, v in admissible_jvectors(p, j_cap=j_cap, v_cap=work):
        sj = sum(jv)
        term = IntSeries.one(work - v if work > v else 1)
        for j in jv:
            if j:
                term = term * inv_poch(j)
        total = total + term.shift(v).scale(-1 if sj & 1 else 1).truncate(work)
    lhs = (euler_product(work) * total).shift(-p.h_d).scale(p.sign).truncate(q_order)
    rhs = torus_product(t, q_order)
    return _series_report(f"generalized_slater_t{t}", window, lhs, rhs)


def verify_slater(q_order: int, gen_q_order: Optional[int] = None) -> IdentityReport:
    """Slater (86) at q_order plus the generalized product identity for
    t = 2 and t = 3 (at gen_q_order, default q_order)."""
    go = q_order if gen_q_order is None else gen_q_order
    window = {"q_order": q_order, "gen_q_order": go}
    parts = [_slater86(q_order), _gen_slater(2, go), _gen_slater(3, go)]
    return _merge("slater", window, parts)


# -- root-of-unity match -------------------------------------------------------


def verify_root_match(t: int, n_max: int) -> IdentityReport:
    """zeta_N^(2^t - 1) F_t(zeta_N) = J_N(T(3, 2^t); zeta_N) exactly in
    Z[zeta_N] for N = 1 .. n_max (for t = 1: zeta_N F(zeta_N))."""
    if n_max < 1:
        raise ValueError("N_max must be >= 1")
    p = torus_params(t)
    window = {"t": t, "N_max": n_max}
    results = {}
    first = None
    for big_n in range(1, n_max + 1):
        lhs = kz_at_root_of_unity(p, big_n).mul_root_power(2**t - 1)
        rhs = cyc_eval(colored_jones(p, big_n), big_n)
        same = (lhs - rhs).is_zero()
        results[f"N={big_n}"] = "pass" if same else "fail"
        if not same and first is None:
            first = {
                "N": big_n,
                "lhs": list(lhs.coeffs),
                "rhs": list(rhs.coeffs),
            }
    return IdentityReport("root_of_unity_match", window, first is None, first, results)
