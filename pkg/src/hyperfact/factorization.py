"""Factorization reports with built-in reconstruction checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .arith import format_rational
from .errors import FactorizationMismatch, ZeroCheckFailed
from .poly import Poly, product


@dataclass(frozen=True)
class ShiftedSquareFactor:
    """The factor x + a^2, vanishing at x = -a^2."""

    a: Fraction

    def poly(self) -> Poly:
        return Poly([Fraction(self.a) ** 2, 1])

    @property
    def zero(self) -> Fraction:
        return -Fraction(self.a) ** 2

    def to_json(self) -> dict:
        return {"type": "x_plus_a2", "a": format_rational(self.a)}


@dataclass(frozen=True)
class QQuadraticFactor:
    """The factor 1 - 2 x s + s^2 with s = t q^{k-1}; zero at x = (s + 1/s) / 2."""

    t: Fraction
    q: Fraction
    k: int

    @property
    def s(self) -> Fraction:
        return Fraction(self.t) * Fraction(self.q) ** (self.k - 1)

    def poly(self) -> Poly:
        s = self.s
        return Poly([1 + s * s, -2 * s])

    @property
    def zero(self) -> Fraction:
        s = self.s
        return (s + 1 / s) / 2

    def to_json(self) -> dict:
        return {
            "type": "q_quadratic",
            "t": format_rational(self.t),
            "q": format_rational(self.q),
            "k": self.k,
        }


Factor = Union[ShiftedSquareFactor, QQuadraticFactor]


@dataclass(frozen=True)
class FactorizationReport:
    """original = constant * prod(factors) * cofactor, with explicit zeros."""

    original: Poly
    factors: tuple
    constant: Fraction
    cofactor: Poly = field(default_factory=lambda: Poly.constant(1))
    zeros: tuple = ()

    def factor_block(self) -> Poly:
        return product(f.poly() for f in self.factors)

    def expand(self) -> Poly:
        return self.factor_block() * self.cofactor * self.constant

    def check(self) -> FactorizationReport:
        """Raise unless the expansion and every zero match ``original`` exactly."""
        expanded = self.expand()
        if expanded != self.original:
            diff = self.original - expanded
            raise FactorizationMismatch(
                f"reconstruction differs from the direct polynomial by {diff}"
            )
        for z in self.zeros:
            value = self.original(z)
            if value != 0:
                raise ZeroCheckFailed(f"claimed zero {z} gives {value}")
        return self

    def to_json(self) -> dict:
        return {
            "constant": format_rational(self.constant),
            "factors": [f.to_json() for f in self.factors],
            "cofactor_coeffs": self.cofactor.to_json(),
            "zeros": [format_rational(z) for z in self.zeros],
        }


def match_constant(original: Poly, block: Poly) -> Fraction:
    """Scalar c with original = c * block, read off the leading coefficients."""
    if block.is_zero() or original.degree != block.degree:
        raise FactorizationMismatch(
            f"degree {original.degree} polynomial cannot be a multiple of a "
            f"degree {block.degree} product"
        )
    return original.leading / block.leading
