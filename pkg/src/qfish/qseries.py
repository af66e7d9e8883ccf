"""q-hypergeometric building blocks.

Pochhammer symbols, Gaussian binomials, the periodic sign characters
attached to the torus knots T(3, 2^t), partial theta functions, and the
five-fold infinite products tied to them by Watson's quintiple product
identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .cyclotomic import CycInt
from .series import IntSeries, progression_product


def pochhammer(base_exp: int, n: int, out_order: Optional[int] = None) -> IntSeries:
    """(q^base_exp; q)_n = prod_{k=1..n} (1 - q^(base_exp+k-1)).

    base_exp may be <= 0, giving a Laurent polynomial; for base_exp = 1-N
    and n >= N the factor (1 - q^0) makes the product identically zero.
    ``out_order`` None returns the exact polynomial.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = IntSeries.one(out_order)
    for k in range(1, n + 1):
        e = base_exp + k - 1
        if e == 0:
            return IntSeries.zero(out_order)
        acc = acc - acc.shift(e)
    return acc


@lru_cache(maxsize=None)
def _binom_cache(n: int, k: int) -> tuple:
    """Gaussian binomial [n, k] as a coefficient tuple (q-Pascal recursion)."""
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    a = list(_binom_cache(n - 1, k - 1))
    b = _binom_cache(n - 1, k)
    out = a + [0] * (k + len(b) - len(a))
    for i, c in enumerate(b):
        out[k + i] += c
    return tuple(out)


def q_binomial(n: int, k: int) -> IntSeries:
    """The Gaussian binomial coefficient as an exact polynomial.

    Zero when k < 0 or k > n (in particular for any k >= 0 when n < 0),
    matching the vanishing conventions the multisum engines rely on.
    """
    return IntSeries.make(0, _binom_cache(n, k), None)


def binom_row(n: int) -> list:
    """[n, j] for j = 0..max(n, 0) as raw coefficient lists."""
    if n < 0:
        return []
    return [list(_binom_cache(n, j)) for j in range(n + 1)]


@dataclass(frozen=True, slots=True)
class PeriodicChar:
    """Periodic integer function given by a residue table of -1/0/+1 values."""

    period: int
    values: tuple

    def __call__(self, n: int) -> int:
        return self.values[n % self.period]

    def support_residues(self) -> list:
        return [r for r, v in enumerate(self.values) if v]


@lru_cache(maxsize=None)
def chi_t(t: int) -> PeriodicChar:
    """The sign character of modulus 3*2^(t+1) attached to T(3, 2^t).

    +1 at 2^(t+1)-3 and 3+2^(t+2), -1 at 2^(t+1)+3 and 2^(t+2)-3.  t = 1 is
    admitted and reproduces the conductor-12 character with support
    {1, 5, 7, 11}.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    period = 3 * 2 ** (t + 1)
    vals = [0] * period
    vals[(2 ** (t + 1) - 3) % period] = 1
    vals[(3 + 2 ** (t + 2)) % period] = 1
    vals[(2 ** (t + 1) + 3) % period] = -1
    vals[(2 ** (t + 2) - 3) % period] = -1
    return PeriodicChar(period, tuple(vals))


@dataclass(frozen=True, slots=True)
class ThetaSpec:
    """Data (a, b, nu, chi) of a partial theta sum over n**nu chi(n) q^((n^2-a)/b)."""

    a: int
    b: int
    nu: int
    char: PeriodicChar

    def exponent(self, n: int) -> int:
        num = n * n - self.a
        if num % self.b:
            raise ValueError(f"(n^2-a)/b is not integral at n={n}")
        return num // self.b


def theta_spec_t(t: int, nu: int) -> ThetaSpec:
    """ThetaSpec with a = (2^(t+1)-3)^2, b = 3*2^(t+2) and the chi_t character.

    The support condition ((n^2-a)/b integral wherever chi(n) != 0) is
    verified over a full period at construction.
    """
    if nu not in (0, 1):
        raise ValueError("nu must be 0 or 1")
    char = chi_t(t)
    a = (2 ** (t + 1) - 3) ** 2
    b = 3 * 2 ** (t + 2)
    for r in char.support_residues():
        if (r * r - a) % b:
            raise ValueError(f"support condition fails at residue {r} (chi_t bug)")
    return ThetaSpec(a, b, nu, char)


def partial_theta(spec: ThetaSpec, out_order: int) -> IntSeries:
    """sum_{n>=0} n^nu chi(n) q^((n^2-a)/b), all terms with exponent < out_order.

    Only the arithmetic progressions supporting chi are scanned.
    """
    if out_order < 1:
        raise ValueError("out_order must be >= 1")
    terms = {}
    p = spec.char.period
    for r in spec.char.support_residues():
        sign = spec.char.values[r]
        n = r
        while True:
            e = spec.exponent(n)
            if e >= out_order:
                break
            w = sign * (n if spec.nu else 1)
            terms[e] = terms.get(e, 0) + w
            n += p
    if not terms:
        return IntSeries.zero(out_order)
    lo = min(terms)
    out = [0] * (out_order - lo)
    for e, c in terms.items():
        out[e - lo] = c
    return IntSeries.make(lo, out, out_order)


def mean_value_zero(spec: ThetaSpec, m: int) -> bool:
    """Exact check that n -> zeta_M^((n^2-a)/b) chi(n) sums to zero over a period.

    The sum runs over M * period(chi) consecutive integers and is evaluated
    in Z[zeta_M]; no floating point is involved.
    """
    if m < 1:
        raise ValueError("M must be >= 1")
    acc = [0] * m
    for n in range(1, m * spec.char.period + 1):
        c = spec.char(n)
        if c:
            acc[spec.exponent(n) % m] += c
    return CycInt(m, _cyc_reduce(acc, m)).is_zero()


def _cyc_reduce(acc: list, m: int) -> tuple:
    from .cyclotomic import _reduce

    return _reduce(acc, m)


def torus_product_pairs(t: int) -> list:
    """(start, step) data of the five-fold product attached to T(3, 2^t)."""
    p2 = 2**t
    return [
        (p2 - 1, 2 * p2),
        (p2 + 1, 2 * p2),
        (2 * p2, 2 * p2),
        (2, 4 * p2),
        (4 * p2 - 2, 4 * p2),
    ]


def torus_product(t: int, out_order: int) -> IntSeries:
    """(q^(2^t-1), q^(2^t+1), q^(2^(t+1)); q^(2^(t+1)))_inf (q^2, q^(2^(t+2)-2); q^(2^(t+2)))_inf."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return progression_product(torus_product_pairs(t), out_order)


def quintiple_sides(q_power: int, x_power: int, out_order: int) -> tuple:
    """Both sides of Watson's quintiple product identity under q -> q^q_power, x -> q^x_power.

    Left: the bilateral sum over k of q^(q_power*k(3k-1)/2 + 3k*x_power)
    (1 - q^(x_power + q_power*k)); right: the matching five-fold product.
    The two sides are computed independently.  Raises if the substitution
    does not give series bounded below / genuine power series.
    """
    if q_power < 1:
        raise ValueError("q substitution must have positive exponent (sum unbounded below)")
    pairs = [
        (q_power, q_power),
        (x_power, q_power),
        (q_power - x_power, q_power),
        (q_power + 2 * x_power, 2 * q_power),
        (q_power - 2 * x_power, 2 * q_power),
    ]
    if any(start < 1 for start, _ in pairs):
        raise ValueError("substitution gives a product factor with nonpositive exponent")
    terms = {}

    def _add(e: int, c: int) -> None:
        if e < out_order:
            terms[e] = terms.get(e, 0) + c

    k = 0
    while True:
        hit = False
        for kk in ((k,) if k == 0 else (k, -k)):
            e1 = q_power * kk * (3 * kk - 1) // 2 + 3 * kk * x_power
            e2 = e1 + x_power + q_power * kk
            if min(e1, e2) < out_order:
                hit = True
                _add(e1, 1)
                _add(e2, -1)
        if not hit and k > 0:
            break
        k += 1
    out = [0] * out_order
    for e, c in terms.items():
        if e < 0:
            raise ValueError("bilateral sum has exponents unbounded below")
        out[e] = c
    lhs = IntSeries.make(0, out, out_order)
    rhs = progression_product(pairs, out_order)
    return lhs, rhs
