"""Generalized Fishburn numbers and their arithmetic.

xi_t(n) are the coefficients of F_t(1-q).  Substituting q -> 1-q into a
*truncation* of the partial sum scrambles every coefficient (each dropped
monomial (1-q)^e has nonzero constant term), so the engine substitutes into
the exact partial-sum polynomial instead, factor by factor: the image of
the n-th summand is divisible by q^n because 1 - (1-q)^k = kq + O(q^2),
which both truncates the computation at `count` coefficients and makes the
result independent of the summation bound once it reaches count - 1.

Also here: s-dissections, the S-sets of exponent residues, the
(q)_lambda-divisibility checker for dissection pieces, the prime-power
congruence verifier, and the two supporting binomial lemmas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .backend import mul_trunc
from .qseries import ThetaSpec, pochhammer, theta_spec_t
from .series import (
    DivisionWitness,
    IntSeries,
    NotPolynomialError,
    invert_unit,
    one_minus_q_power,
    poly_divides,
)
from .torus import TorusParams, kz_full_polynomial, torus_params


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- substituted-domain engine ----------------------------------------------


class _SubTables:
    """Shared data for arithmetic in the image of q -> 1-q, truncated at count."""

    def __init__(self, count: int):
        self.count = count
        self.pw = [[1]]  # pw[e] = (1-q)^e

    def power(self, e: int) -> list:
        while len(self.pw) <= e:
            prev = self.pw[-1]
            nxt = [0] * min(len(prev) + 1, self.count)
            for i, c in enumerate(prev):
                if c:
                    if i < len(nxt):
                        nxt[i] += c
                    if i + 1 < len(nxt):
                        nxt[i + 1] -= c
            self.pw.append(nxt)
        return self.pw[e]


def _sub_pascal_row(prev: Optional[list], n: int, tab: _SubTables) -> list:
    """Row n of the Gaussian binomial table, evaluated at q -> 1-q."""
    if n == 0:
        return [[1]]
    row = [[1]]
    for k in range(1, n):
        row.append(_ladd(prev[k - 1], mul_trunc(tab.power(k), prev[k], tab.count)))
    row.append([1])
    return row


def _ladd(a: Optional[list], b: Optional[list]):
    if a is None:
        return b
    if b is None:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        if c:
            out[i] += c
    return out


def _sub_inner(p: TorusParams, n: int, order: int, row_n: list, row_np1: list,
               tab: _SubTables) -> list:
    """Image of the inner admissible-vector sum under q -> 1-q, trunc at order.

    Same (S, A)-pool dynamic program as the q-domain engine in
    qfish.torus, with q-power weights replaced by products with powers of
    (1-q); no pruning is possible here since (1-q)^v has constant term 1.
    """
    m = p.m
    jmax = n + 1
    fn = []
    fp = []
    for j in range(jmax + 1):
        w = tab.power(j * (j - 1) // 2)
        sgn = -1 if j & 1 else 1
        bn = row_n[j] if j < len(row_n) else None
        bp = row_np1[j] if j < len(row_np1) else None
        fn.append([sgn * c for c in mul_trunc(w, bn, order)] if bn else None)
        fp.append([sgn * c for c in mul_trunc(w, bp, order)] if bp else None)
    states = {0: (None, [1])}
    for level in range(1, m):
        nxt: dict = {}
        for total, (s_pool, a_pool) in states.items():
            sa = _ladd(s_pool, a_pool)
            for j in range(jmax + 1):
                t2 = total + j * level
                ent = nxt.get(t2)
                if ent is None:
                    ent = [None, None]
                    nxt[t2] = ent
                if sa is not None and fn[j] is not None:
                    ent[0] = _ladd(ent[0], mul_trunc(sa, fn[j], order))
                if a_pool is not None and fp[j] is not None:
                    ent[1] = _ladd(ent[1], mul_trunc(a_pool, fp[j], order))
        states = {t: (e[0], e[1]) for t, e in nxt.items()}
    out: list = []
    for total, (s_pool, a_pool) in states.items():
        if (total - p.a) % m:
            continue
        val = _ladd(s_pool, a_pool)
        if val:
            out = _ladd(out, mul_trunc(tab.power((total - p.a) // m), val, order))
    return out


def xi_series(t: int, n_top: int, count: int) -> list:
    """First ``count`` coefficients of F_t(1-q; N) with N = n_top.

    Exactly the substitution image of the full partial-sum polynomial;
    summands with n >= count are invisible below q^count and are skipped,
    which is also why the result stabilizes in N.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if n_top < 0:
        raise ValueError("N must be >= 0")
    p = torus_params(t)
    tab = _SubTables(count)
    total = [0] * count
    poch_tail = [1]  # (q)_n at q -> 1-q equals q^n * poch_tail
    row = _sub_pascal_row(None, 0, tab)
    for n in range(min(n_top, count - 1) + 1):
        if n:
            u = [(-1 if i & 1 else 1) * math.comb(n, i + 1) for i in range(count - n)]
            poch_tail = mul_trunc(poch_tail, u, count - n)
        row_next = _sub_pascal_row(row, n + 1, tab)
        if p.m == 1:
            inner = [1]  # empty vector; its (1-q)^(-1) cancels the global prefactor
        else:
            inner = _sub_inner(p, n, count - n, row, row_next, tab)
        contrib = mul_trunc(poch_tail, inner, count - n)
        for i, c in enumerate(contrib):
            if c:
                total[n + i] += c
        row = row_next
    if p.m > 1:
        pref = invert_unit(one_minus_q_power(p.h_d, count), count)
        total = mul_trunc(total, list(pref.coeffs), count)
        if p.sign < 0:
            total = [-c for c in total]
    return total


@lru_cache(maxsize=None)
def _xi_cached(t: int, count: int) -> tuple:
    return tuple(xi_series(t, count + 4, count))


def xi_coefficients(t: int, count: int) -> list:
    """xi_t(0 .. count-1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(_xi_cached(t, count))


# -- dissection and divisibility ---------------------------------------------


@dataclass(frozen=True, slots=True)
class Dissection:
    """s-dissection of a Laurent polynomial: F(q) = sum_i q^i A_i(q^s).

    Exponent e lands in piece e mod s at power floor(e / s), so negative
    exponents are handled consistently.
    """

    s: int
    pieces: tuple
    n_index: Optional[int] = None

    def reconstruct(self) -> IntSeries:
        total = IntSeries.zero()
        for i, piece in enumerate(self.pieces):
            if not piece.is_zero():
                total = total + piece.inflate(self.s).shift(i)
        return total


def dissection(series: IntSeries, s: int, n_index: Optional[int] = None) -> Dissection:
    if s < 1:
        raise ValueError("s must be >= 1")
    if series.order is not None:
        raise NotPolynomialError("dissection needs a completed (exact) polynomial")
    buckets: list = [{} for _ in range(s)]
    for idx, c in enumerate(series.coeffs):
        if c:
            e = series.min_exp + idx
            buckets[e % s][e // s] = c
    pieces = []
    for bucket in buckets:
        if not bucket:
            pieces.append(IntSeries.zero())
            continue
        lo = min(bucket)
        out = [0] * (max(bucket) - lo + 1)
        for e, c in bucket.items():
            out[e - lo] = c
        pieces.append(IntSeries.make(lo, out, None))
    return Dissection(s, tuple(pieces), n_index)


def S_set(spec: ThetaSpec, s: int) -> set:
    """Residues mod s of (n^2 - a)/b over the support of the character.

    n -> exponent mod s has period period(chi) * s, so one scan of that
    range is exhaustive.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    out = set()
    for n in range(spec.char.period * s):
        if spec.char(n):
            out.add(spec.exponent(n) % s)
    return out


@dataclass(frozen=True, slots=True)
class DivisibilityReport:
    t: int
    s: int
    n_index: int
    lam: int
    s_set: tuple
    entries: tuple  # per checked residue class
    passed: bool

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "s": self.s,
            "N": self.n_index,
            "lambda": self.lam,
            "s_set": list(self.s_set),
            "entries": [dict(e) for e in self.entries],
            "pass": self.passed,
        }


def divisibility_check(t: int, s: int, n_index: int) -> DivisibilityReport:
    """Dissect the exact partial sum F_t(q; N) and test, for every residue
    class i outside the S-set, whether (q)_lambda divides the piece A_i up
    to a monomial unit, lambda = floor((N+1)/s).

    Failures are recorded in the report rather than raised: for odd t the
    pieces are Laurent and the divisibility statement's exact scope is an
    open question, so outcomes are data.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    p = torus_params(t)
    poly = kz_full_polynomial(p, n_index)
    dis = dissection(poly, s, n_index)
    lam = (n_index + 1) // s
    divisor = pochhammer(1, lam)
    sset = tuple(sorted(S_set(theta_spec_t(t, 0), s)))
    entries = []
    ok = True
    for i in range(s):
        if i in sset:
            continue
        piece = dis.pieces[i]
        wit: DivisionWitness = poly_divides(divisor, piece)
        ent = {"i": i, "divisible": wit.divides, "unit_exp": wit.unit_exp}
        if wit.divides:
            ent["quotient_degree"] = wit.quotient.degree
        else:
            ok = False
            ent["remainder_degree"] = wit.remainder.degree if wit.remainder else None
        entries.append(ent)
    return DivisibilityReport(t, s, n_index, lam, sset, tuple(entries), ok)


# -- congruences ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CongruenceReport:
    t: int
    p: int
    r: int
    m_max: int
    j_range: tuple
    entries: tuple
    passed: bool
    vacuous: bool = False
    scanned: tuple = ()

    def as_dict(self) -> dict:
        out = {
            "t": self.t,
            "p": self.p,
            "r": self.r,
            "m_max": self.m_max,
            "j_range": list(self.j_range),
            "entries": [dict(e) for e in self.entries],
            "pass": self.passed,
            "vacuous": self.vacuous,
        }
        if self.scanned:
            out["scanned_extra_j"] = [dict(e) for e in self.scanned]
        return out


def congruence_j_range(t: int, p: int) -> list:
    """j = 1 .. p - 1 - max(S-set): the indices with a divisibility claim."""
    sset = S_set(theta_spec_t(t, 0), p)
    return list(range(1, p - max(sset)))


def verify_congruence(t: int, p: int, r: int, m_max: int, scan_all_j: bool = False) -> CongruenceReport:
    """Check xi_t(p^r m - j) == 0 (mod p^r) for m <= m_max and j in the
    claimed range.

    For t = 1 the same S-set rule reproduces the classical Fishburn
    congruences (j <= 2 at p = 5, j <= 1 at p = 7, j <= 3 at p = 11).
    With ``scan_all_j`` the report also records residues for j beyond the
    claimed range; those carry no expectation and do not affect `pass`.
    """
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    if r < 1 or m_max < 1 or t < 1:
        raise ValueError("r, m_max must be >= 1 and t >= 1")
    j_range = congruence_j_range(t, p)
    modulus = p**r
    if not j_range:
        return CongruenceReport(t, p, r, m_max, (), (), True, vacuous=True)
    xs = xi_coefficients(t, modulus * m_max)
    entries = []
    scanned = []
    ok = True
    scan_js = range(1, p) if scan_all_j else j_range
    for m in range(1, m_max + 1):
        for j in scan_js:
            idx = modulus * m - j
            residue = xs[idx] % modulus
            ent = {"m": m, "j": j, "index": idx, "xi": xs[idx], "residue": residue}
            if j in j_range:
                entries.append(ent)
                if residue:
                    ok = False
            else:
                scanned.append(ent)
    return CongruenceReport(
        t, p, r, m_max, tuple(j_range), tuple(entries), ok, scanned=tuple(scanned)
    )


def straub_order_bound(p: int, r: int, n: int) -> bool:
    """Does (1 - (1-q)^p)^n vanish below q^(pn - (p-1)(r-1)) modulo p^r?

    Expands the power exactly and reduces; this is the order bound that
    turns dissection divisibility into prime-power congruences.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    one_minus_q_to_p = IntSeries.make(
        0, [(-1 if i & 1 else 1) * math.comb(p, i) for i in range(p + 1)], None
    )
    base = IntSeries.one() - one_minus_q_to_p
    pw = IntSeries.one()
    for _ in range(n):
        pw = pw * base
    bound = p * n - (p - 1) * (r - 1)
    modulus = p**r
    return all(pw.coeff(e) % modulus == 0 for e in range(min(bound, pw.degree + 1)))


def binom_congruence(i: int, l: int, p: int, r: int, m: int, j: int) -> bool:
    """binom(i + l*p, p^r m - j) == 0 (mod p^r), the coefficient lemma used
    with 0 <= i < p and j < p - i."""
    bottom = p**r * m - j
    if bottom < 0:
        return True
    value = math.comb(i + l * p, bottom) if i + l * p >= 0 else 0
    return value % p**r == 0
