"""Truncated Laurent series over arbitrary-precision integers.

``IntSeries`` is the carrier for every single-variable q-series in the
package.  A value is a dense coefficient window ``[min_exp, order)`` plus
the truncation order; ``order is None`` means the value is an exact Laurent
polynomial (known to all orders, zero outside the stored window).

Windows are tracked explicitly and combined with ``min`` on every binary
operation; they are never silently widened.  All values are immutable and
all operations are pure, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .backend import mul, mul_trunc


class SeriesError(ValueError):
    pass


class TruncationError(SeriesError):
    """Requested data lies at or beyond the truncation order."""


class NonUnitError(SeriesError):
    """Inversion attempted on a series that is not a unit over the integers."""


class NotPolynomialError(SeriesError):
    """An exact (untruncated) Laurent polynomial was required."""


def _min_order(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True, slots=True)
class IntSeries:
    """Dense integer Laurent series truncated at ``order``.

    ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``.  After
    normalization the leading stored coefficient is nonzero (unless the
    series is zero on its window) and, for finite order, the window
    ``min_exp .. order-1`` is covered exactly.
    """

    min_exp: int
    coeffs: tuple
    order: Optional[int]

    # -- construction ------------------------------------------------------

    @staticmethod
    def make(min_exp: int, coeffs: Iterable[int], order: Optional[int] = None) -> "IntSeries":
        cs = list(coeffs)
        if order is not None:
            width = order - min_exp
            if width <= 0:
                return IntSeries(order, (), order)
            if len(cs) > width:
                cs = cs[:width]
            elif len(cs) < width:
                cs.extend([0] * (width - len(cs)))
        # strip leading zeros (bump min_exp)
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead:
            cs = cs[lead:]
            min_exp += lead
        if order is None:
            while cs and cs[-1] == 0:
                cs.pop()
            if not cs:
                min_exp = 0
        else:
            if not cs:
                min_exp = order
        return IntSeries(min_exp, tuple(cs), order)

    @staticmethod
    def zero(order: Optional[int] = None) -> "IntSeries":
        return IntSeries.make(0, (), order)

    @staticmethod
    def one(order: Optional[int] = None) -> "IntSeries":
        return IntSeries.make(0, (1,), order)

    @staticmethod
    def monomial(exp: int, coeff: int = 1, order: Optional[int] = None) -> "IntSeries":
        return IntSeries.make(exp, (coeff,), order)

    @staticmethod
    def from_coeffs(coeffs: Iterable[int], order: Optional[int] = None) -> "IntSeries":
        """Series with exponents starting at 0."""
        return IntSeries.make(0, coeffs, order)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_exact(self) -> bool:
        return self.order is None

    @property
    def degree(self) -> int:
        """Degree of an exact polynomial (-1 for the zero polynomial)."""
        if self.order is not None:
            raise NotPolynomialError("degree is only defined for exact polynomials")
        return self.min_exp + len(self.coeffs) - 1 if self.coeffs else -1

    def coeff(self, exp: int) -> int:
        if self.order is not None and exp >= self.order:
            raise TruncationError(f"coefficient of q^{exp} unknown beyond order {self.order}")
        if exp < self.min_exp or exp >= self.min_exp + len(self.coeffs):
            return 0
        return self.coeffs[exp - self.min_exp]

    def support(self) -> list:
        return [self.min_exp + i for i, c in enumerate(self.coeffs) if c]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.min_exp + i
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + term)
        body = " ".join(parts).lstrip("+ ") or "0"
        if body.startswith("- "):
            body = "-" + body[2:]
        if self.order is not None:
            body += f" + O(q^{self.order})"
        return body

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntSeries") -> "IntSeries":
        order = _min_order(self.order, other.order)
        if not self.coeffs:
            return other.truncate(order) if order is not None else other
        if not other.coeffs:
            return self.truncate(order) if order is not None else self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        if order is not None:
            hi = min(hi, order)
        out = [0] * (hi - lo)
        for src in (self, other):
            off = src.min_exp - lo
            for i, c in enumerate(src.coeffs):
                if off + i < len(out):
                    out[off + i] += c
        return IntSeries.make(lo, out, order)

    def __neg__(self) -> "IntSeries":
        return IntSeries(self.min_exp, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        # result order per the degree-shift rule
        order = None
        if self.order is not None:
            order = self.order + other.min_exp
        if other.order is not None:
            order = _min_order(order, other.order + self.min_exp)
        lo = self.min_exp + other.min_exp
        if not self.coeffs or not other.coeffs:
            return IntSeries.make(lo, (), order)
        if order is None:
            out = mul(list(self.coeffs), list(other.coeffs))
        else:
            out = mul_trunc(list(self.coeffs), list(other.coeffs), order - lo)
        return IntSeries.make(lo, out, order)

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntSeries":
        if c == 0:
            return IntSeries.make(0, (), self.order)
        return IntSeries(self.min_exp, tuple(c * x for x in self.coeffs), self.order)

    def shift(self, k: int) -> "IntSeries":
        """Multiply by q**k (exponent translation)."""
        return IntSeries(
            self.min_exp + k,
            self.coeffs,
            None if self.order is None else self.order + k,
        )

    def truncate(self, order: Optional[int]) -> "IntSeries":
        """Narrow the window to ``order`` (never widens)."""
        if order is None or (self.order is not None and order >= self.order):
            return self
        return IntSeries.make(self.min_exp, self.coeffs, order)

    def with_order(self, order: int) -> "IntSeries":
        """View an exact polynomial as a series truncated at ``order``."""
        if self.order is not None:
            return self.truncate(order)
        return IntSeries.make(self.min_exp, self.coeffs, order)

    def inflate(self, k: int) -> "IntSeries":
        """Substitute q -> q**k (exact polynomials only)."""
        if self.order is not None:
            raise NotPolynomialError("inflate needs an exact polynomial")
        if k <= 0:
            raise ValueError("inflation factor must be positive")
        if not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntSeries.make(self.min_exp * k, out, None)

    def mul_one_minus_qk(self, k: int) -> "IntSeries":
        """Multiply by (1 - q**k), k >= 1; cheaper than a general product."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return self - self.shift(k)


def series_arith(a: IntSeries, b: IntSeries, op: str, k: int = 0) -> IntSeries:
    """Dispatch wrapper: op in {'add', 'sub', 'mul', 'shift'}.

    'shift' translates ``a`` by ``k`` and ignores ``b``.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift(k)
    raise ValueError(f"unknown op {op!r}")


def invert_unit(a: IntSeries, out_order: Optional[int] = None) -> IntSeries:
    """Multiplicative inverse on the truncation window.

    Requires min_exp 0 and constant coefficient +-1 (the only units of Z[[q]]
    whose inverses stay integral).
    """
    order = a.order if out_order is None else out_order
    if order is None:
        raise SeriesError("invert_unit needs a truncation order")
    if a.min_exp != 0 or not a.coeffs or a.coeffs[0] not in (1, -1):
        raise NonUnitError("series is not a unit over the integers (constant term must be +-1)")
    c0 = a.coeffs[0]
    n = order
    out = [0] * n
    out[0] = c0
    for k in range(1, n):
        s = 0
        for i in range(1, min(k, len(a.coeffs) - 1) + 1):
            ai = a.coeffs[i]
            if ai:
                s += ai * out[k - i]
        out[k] = -c0 * s
    return IntSeries.make(0, out, order)


def substitute_one_minus_q(a: IntSeries, out_order: int) -> IntSeries:
    """Composition a(1-q), expanded as a power series in q.

    Exact for polynomial content: every stored coefficient participates.
    Negative powers of (1-q) are expanded through ``invert_unit``.
    """
    if a.order is not None and out_order > a.order:
        raise TruncationError(
            f"composition to order {out_order} needs input known to that order (have {a.order})"
        )
    if out_order <= 0:
        return IntSeries.zero(out_order)
    if not a.coeffs:
        return IntSeries.zero(out_order)
    # a = q^min_exp * P(q); evaluate P at u = 1-q by Horner, then fix the
    # (1-q)^min_exp prefactor.
    acc: list = []
    for c in reversed(a.coeffs):
        # acc <- acc * (1-q) + c
        nxt = [0] * min(len(acc) + 1, out_order)
        for i, x in enumerate(acc):
            if x:
                if i < len(nxt):
                    nxt[i] += x
                if i + 1 < len(nxt):
                    nxt[i + 1] -= x
        nxt[0] += c
        acc = nxt
    body = IntSeries.make(0, acc, out_order)
    e = a.min_exp
    if e == 0:
        return body
    pref = one_minus_q_power(abs(e), out_order)
    if e < 0:
        pref = invert_unit(pref, out_order)
    return body * pref


def one_minus_q_power(e: int, out_order: int) -> IntSeries:
    """(1-q)**e truncated, e >= 0, via binomial coefficients."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    out = [0] * out_order
    c = 1
    for i in range(min(e, out_order - 1) + 1):
        out[i] = c if i % 2 == 0 else -c
        c = c * (e - i) // (i + 1)
    return IntSeries.make(0, out, out_order)


def euler_product(out_order: int) -> IntSeries:
    """(q;q)_infinity by the pentagonal number expansion."""
    if out_order < 1:
        raise ValueError("out_order must be >= 1")
    out = [0] * out_order
    out[0] = 1
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= out_order and e2 >= out_order:
            break
        s = -1 if k % 2 else 1
        if e1 < out_order:
            out[e1] += s
        if e2 < out_order:
            out[e2] += s
        k += 1
    return IntSeries.make(0, out, out_order)


def divisor_sum_series(out_order: int) -> IntSeries:
    """sum_{i>=1} q^i/(1-q^i) = sum_n d(n) q^n with d the divisor count."""
    if out_order < 1:
        raise ValueError("out_order must be >= 1")
    out = [0] * out_order
    for i in range(1, out_order):
        for n in range(i, out_order, i):
            out[n] += 1
    return IntSeries.make(0, out, out_order)


def progression_product(pairs: Iterable[tuple], out_order: int) -> IntSeries:
    """Product of (1 - q^(start + k*step)) over k >= 0 for each (start, step).

    Each factor is expanded only while its exponent stays below out_order.
    """
    exps = []
    for start, step in pairs:
        if start < 1 or step < 1:
            raise ValueError("progression exponents must be positive")
        exps.extend(range(start, out_order, step))
    exps.sort()
    out = [0] * out_order
    out[0] = 1
    top = 1  # first index beyond current content
    for e in exps:
        # multiply by (1 - q^e) in place, top-down so sources are unmodified
        for i in range(min(top, out_order - e) - 1, -1, -1):
            if out[i]:
                out[i + e] -= out[i]
        top = min(top + e, out_order)
    return IntSeries.make(0, out, out_order)


# -- exact polynomial division --------------------------------------------


@dataclass(frozen=True, slots=True)
class DivisionWitness:
    divides: bool
    quotient: Optional[IntSeries]  # h with p = d * h * q**unit_exp
    unit_exp: int
    remainder: Optional[IntSeries]  # set when divides is False


def poly_divides(d: IntSeries, p: IntSeries) -> DivisionWitness:
    """Does d divide p up to a monomial unit q**k?

    True iff p = d * h * q**k with h an integer polynomial and k an integer.
    The monomial unit accommodates Laurent inputs (dissection pieces of
    series with negative exponents).  Returns the witness (h, k), or the
    division remainder when the answer is no.
    """
    if d.order is not None or p.order is not None:
        raise NotPolynomialError("poly_divides operates on exact polynomials")
    if d.is_zero():
        raise ValueError("divisor must be nonzero")
    if p.is_zero():
        return DivisionWitness(True, IntSeries.zero(), 0, None)
    unit = p.min_exp - d.min_exp
    num = list(p.coeffs)
    den = list(d.coeffs)
    # long division over Q, then an integrality check on the quotient
    # (division is already exact over Z for the monic-up-to-sign divisors
    # the engine feeds in, e.g. (q)_lambda).
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    for i in range(len(rem) - len(den), -1, -1):
        c = rem[i + len(den) - 1] / lead
        quo[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    if any(rem):
        # scale the Q[q]-remainder to integers so the witness stays in Z[q]
        scale = 1
        for x in rem:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        rser = IntSeries.make(p.min_exp, [int(x * scale) for x in rem], None)
        return DivisionWitness(False, None, unit, rser)
    if any(c.denominator != 1 for c in quo):
        # divisible over Q[q] but the quotient is not integral
        return DivisionWitness(False, None, unit, IntSeries.zero())
    h = IntSeries.make(0, [int(c) for c in quo], None)
    return DivisionWitness(True, h, unit, None)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def first_difference(a: IntSeries, b: IntSeries):
    """First exponent where a and b disagree on their common window.

    Returns None when equal there, else (exponent, a_coeff, b_coeff).
    """
    order = _min_order(a.order, b.order)
    lo = min(a.min_exp, b.min_exp)
    hi = max(a.min_exp + len(a.coeffs), b.min_exp + len(b.coeffs))
    if order is not None:
        hi = min(hi, order)
    for e in range(lo, hi):
        ca, cb = a.coeff(e), b.coeff(e)
        if ca != cb:
            return (e, ca, cb)
    return None
