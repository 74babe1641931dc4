"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .arith import format_rational, to_rational


class Poly:
    """Immutable polynomial in ``x`` with Fraction coefficients.

    Coefficients are stored lowest degree first with trailing zeros removed;
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(u + v for u, v in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> Poly:
        return _lift(other) - self

    def __mul__(self, other) -> Poly:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Exact long division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] / divisor.leading
            quot[i] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] -= c * d
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        lead = self.leading
        return Poly(c / lead for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: Sequence[str]) -> Poly:
        return cls(to_rational(c) for c in coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _lift(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def product(polys: Iterable[Poly]) -> Poly:
    result = Poly.constant(1)
    for p in polys:
        result = result * p
    return result


def interpolate(nodes: Sequence, values: Sequence) -> Poly:
    """Exact interpolating polynomial through ``(nodes[i], values[i])``.

    Uses Newton divided differences, then expands the Newton form into
    monomial coefficients.  Nodes must be distinct.
    """
    xs = [Fraction(v) for v in nodes]
    if len(xs) != len(values):
        raise ValueError("nodes and values differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    table = [Fraction(v) for v in values]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton basis: p = c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
    result = Poly()
    for i in range(n - 1, -1, -1):
        result = result * Poly([-xs[i], 1]) + table[i]
    return result
