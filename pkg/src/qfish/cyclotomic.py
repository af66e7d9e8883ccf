"""Exact arithmetic in Z[zeta_M], the ring of cyclotomic integers.

Elements are integer vectors modulo the M-th cyclotomic polynomial Phi_M,
so root-of-unity evaluations of q-series stay exact: zero means zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import IntSeries, NotPolynomialError


@lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> tuple:
    """Coefficients of Phi_M, by exact division of x^M - 1."""
    if m < 1:
        raise ValueError("M must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]  # x^M - 1
    for d in range(1, m):
        if m % d == 0:
            div = _phi_coeffs(d)
            poly = _exact_div(poly, list(div))
    return tuple(poly)


def _exact_div(num: list, den: list) -> list:
    """Quotient of integer polynomials known to divide exactly (den monic)."""
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    if any(rem):
        raise ArithmeticError("division was not exact")
    return out


def cyclotomic_poly(m: int) -> IntSeries:
    """Phi_M as an exact integer polynomial."""
    return IntSeries.make(0, _phi_coeffs(m), None)


def _reduce(coeffs: list, m: int) -> tuple:
    """Reduce a coefficient list modulo Phi_M to length deg Phi_M."""
    phi = _phi_coeffs(m)
    deg = len(phi) - 1
    cs = list(coeffs)
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            cs[i] = 0
            for j in range(deg + 1):
                cs[i - deg + j] -= c * phi[j]
    cs = cs[:deg]
    cs.extend([0] * (deg - len(cs)))
    return tuple(cs)


@dataclass(frozen=True, slots=True)
class CycInt:
    """Element of Z[x]/(Phi_M(x)), i.e. an integer of the M-th cyclotomic field."""

    level: int
    coeffs: tuple  # length = deg Phi_M = euler_phi(M)

    @staticmethod
    def zero(m: int) -> "CycInt":
        return CycInt(m, _reduce([], m))

    @staticmethod
    def integer(m: int, value: int) -> "CycInt":
        return CycInt(m, _reduce([value], m))

    @staticmethod
    def root_power(m: int, exp: int, coeff: int = 1) -> "CycInt":
        """coeff * zeta_M**exp (any integer exponent)."""
        e = exp % m
        return CycInt(m, _reduce([0] * e + [coeff], m))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "CycInt") -> None:
        if self.level != other.level:
            raise ValueError("cyclotomic levels differ")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.level, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.level, tuple(other * a for a in self.coeffs))
        self._check(other)
        n = len(self.coeffs)
        out = [0] * (2 * n - 1 if n else 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return CycInt(self.level, _reduce(out, self.level))

    __rmul__ = __mul__

    def mul_root_power(self, exp: int) -> "CycInt":
        """Multiply by zeta**exp (cheap monomial product)."""
        e = exp % self.level
        if e == 0:
            return self
        out = [0] * e + list(self.coeffs)
        return CycInt(self.level, _reduce(out, self.level))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = str(c) if i == 0 else f"{c}*z^{i}" if i > 1 else f"{c}*z"
            parts.append(term)
        return " + ".join(parts) if parts else "0"


def cyc_eval(p: IntSeries, m: int) -> CycInt:
    """Image of an exact Laurent polynomial under q -> zeta_M.

    Negative exponents go through zeta**(-1) = zeta**(M-1); truncated input
    is rejected because its evaluation would not be well-defined.
    """
    if p.order is not None:
        raise NotPolynomialError("cyc_eval needs an exact Laurent polynomial")
    acc = [0] * m
    for i, c in enumerate(p.coeffs):
        if c:
            acc[(p.min_exp + i) % m] += c
    return CycInt(m, _reduce(acc, m))
