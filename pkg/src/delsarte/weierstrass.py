"""Sparse exact polynomials in t and short-Weierstrass invariants.

Curves are y^2 = x^3 + a(t) x + b(t); the discriminant is
-16(4a^3 + 27b^2) and j is kept as the unreduced pair
(1728 * 4a^3, 4a^3 + 27b^2), so comparisons against closed forms
cross-multiply instead of needing polynomial gcds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import NonEllipticError


class SparsePoly:
    """Univariate polynomial with Fraction coefficients, exponent -> coeff."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, SparsePoly):
            self._coeffs = dict(coeffs._coeffs)
            return
        if isinstance(coeffs, (int, Fraction)):
            coeffs = {0: Fraction(coeffs)}
        data = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for exp, coeff in items:
            exp = int(exp)
            if exp < 0:
                raise ValueError("negative exponents are not supported")
            coeff = Fraction(coeff) + data.get(exp, 0)
            if coeff:
                data[exp] = coeff
            else:
                data.pop(exp, None)
        self._coeffs = data

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "SparsePoly":
        return cls({exponent: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self):
        return sorted(self._coeffs.items())

    def __add__(self, other):
        other = other if isinstance(other, SparsePoly) else SparsePoly(other)
        out = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            total = out.get(exp, 0) + coeff
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = other if isinstance(other, SparsePoly) else SparsePoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return SparsePoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2
                total = out.get(exp, 0) + c1 * c2
                if total:
                    out[exp] = total
                else:
                    out.pop(exp, None)
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise ValueError("negative powers are not supported")
        result = SparsePoly(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        other = other if isinstance(other, SparsePoly) else SparsePoly(other)
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if self.is_zero:
            return "SparsePoly(0)"
        parts = []
        for exp, coeff in self.items():
            if exp == 0:
                parts.append(str(coeff))
            elif exp == 1:
                parts.append(f"{coeff}*t")
            else:
                parts.append(f"{coeff}*t^{exp}")
        return f"SparsePoly({' + '.join(parts)})"


class WeierstrassData(NamedTuple):
    """Coefficients of y^2 = x^3 + a x + b over k[t]."""

    a: SparsePoly
    b: SparsePoly


def discriminant(curve: WeierstrassData) -> SparsePoly:
    """Discriminant -16(4a^3 + 27b^2); zero raises NonEllipticError."""
    delta = -16 * (4 * curve.a ** 3 + 27 * curve.b ** 2)
    if delta.is_zero:
        raise NonEllipticError("discriminant vanishes identically")
    return delta


def j_invariant(curve: WeierstrassData):
    """The j-invariant as the unreduced pair (1728*4a^3, 4a^3 + 27b^2)."""
    den = 4 * curve.a ** 3 + 27 * curve.b ** 2
    if den.is_zero:
        raise NonEllipticError("discriminant vanishes identically")
    return 1728 * 4 * curve.a ** 3, den
