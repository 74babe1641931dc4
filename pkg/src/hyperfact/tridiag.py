"""Tridiagonal characteristic polynomials and three-term recurrences.

A monic family with ``x P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1}`` has
``P_N(x) = det(x I - A_N)`` for the Jacobi matrix with diagonal ``alpha`` and
off-diagonal entries ``a_k`` where ``a_k^2 = beta_k``.  Only ``beta_k`` ever
enters the determinant, so nothing here takes a square root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import format_rational, to_rational
from .poly import Poly, interpolate


@dataclass(frozen=True)
class TridiagSpec:
    """Diagonal ``alpha[0..N-1]`` and squared off-diagonal ``beta[1..N-1]``.

    ``beta[i]`` holds beta_{i+1}; zero entries are allowed.
    """

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        beta = tuple(Fraction(b) for b in self.beta)
        if not alpha:
            raise ValueError("need at least one diagonal entry")
        if len(beta) != len(alpha) - 1:
            raise ValueError(f"N = {len(alpha)} needs {len(alpha) - 1} beta entries, got {len(beta)}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def N(self) -> int:
        return len(self.alpha)

    def to_json(self) -> dict:
        return {
            "alpha": [format_rational(a) for a in self.alpha],
            "beta": [format_rational(b) for b in self.beta],
        }

    @classmethod
    def from_json(cls, data: dict) -> TridiagSpec:
        return cls(
            tuple(to_rational(a) for a in data["alpha"]),
            tuple(to_rational(b) for b in data.get("beta", [])),
        )


def recurrence_poly(spec: TridiagSpec, k: int) -> Poly:
    """P_k from P_0 = 1, P_1 = x - alpha_0 and the three-term recurrence."""
    if not 0 <= k <= spec.N:
        raise ValueError(f"index {k} outside 0..{spec.N}")
    x = Poly.x()
    prev, cur = Poly(), Poly.constant(1)
    for j in range(k):
        beta = spec.beta[j - 1] if j >= 1 else Fraction(0)
        prev, cur = cur, (x - spec.alpha[j]) * cur - prev * beta
    return cur


def det_poly(spec: TridiagSpec) -> Poly:
    """det(x I_N - A_N) by expanding along the last row.

    D_k = (x - alpha_{k-1}) D_{k-1} - a_{k-1}^2 D_{k-2}; the polynomial is
    assembled from its values at N + 1 integer points so that it is built
    independently of the coefficient recurrence in :func:`recurrence_poly`.
    """
    nodes = [Fraction(i) for i in range(spec.N + 1)]
    return interpolate(nodes, [det_at(spec, x) for x in nodes])


def det_at(spec: TridiagSpec, x) -> Fraction:
    """Numeric value of det(x I - A) at a rational point."""
    x = Fraction(x)
    d_prev, d = Fraction(1), x - spec.alpha[0]
    for k in range(1, spec.N):
        d_prev, d = d, (x - spec.alpha[k]) * d - spec.beta[k - 1] * d_prev
    return d


def blocks(spec: TridiagSpec) -> list[TridiagSpec]:
    """Diagonal blocks obtained by cutting the matrix wherever beta vanishes."""
    out = []
    start = 0
    for k, b in enumerate(spec.beta, start=1):
        if b == 0:
            out.append(TridiagSpec(spec.alpha[start:k], spec.beta[start : k - 1]))
            start = k
    out.append(TridiagSpec(spec.alpha[start:], spec.beta[start:]))
    return out


def split_on_zero_beta(spec: TridiagSpec) -> list[Poly]:
    """Characteristic polynomials of the blocks; their product is det_poly(spec)."""
    return [det_poly(b) for b in blocks(spec)]


@dataclass(frozen=True)
class DiophantineReport:
    all_integer: bool
    equispaced: bool
    spacing: Fraction | None
    sqrt_neg_equispaced: bool = False
    sqrt_neg_spacing: Fraction | None = None

    def to_json(self) -> dict:
        fmt = lambda v: None if v is None else format_rational(v)  # noqa: E731
        return {
            "all_integer": self.all_integer,
            "equispaced": self.equispaced,
            "spacing": fmt(self.spacing),
            "sqrt_neg_equispaced": self.sqrt_neg_equispaced,
            "sqrt_neg_spacing": fmt(self.sqrt_neg_spacing),
        }


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Nonnegative rational square root, or None when it is irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    p, q = isqrt(value.numerator), isqrt(value.denominator)
    if p * p == value.numerator and q * q == value.denominator:
        return Fraction(p, q)
    return None


def _spacing(values: list[Fraction]) -> Fraction | None:
    if len(values) < 2:
        return None
    gaps = {b - a for a, b in zip(values, values[1:])}
    return gaps.pop() if len(gaps) == 1 else None


def diophantine_check(zeros) -> DiophantineReport:
    """Integrality and equal spacing of a zero list.

    Also reports equal spacing of sqrt(-x) when every zero is <= 0 with a
    rational root, since zeros of the form -(a + j)^2 are equally spaced in
    that variable rather than in x.
    """
    zs = sorted(Fraction(z) for z in zeros)
    if not zs:
        raise ValueError("zero list is empty")
    spacing = _spacing(zs)
    equispaced = len(zs) == 1 or spacing is not None
    roots = [rational_sqrt(-z) for z in zs]
    sqrt_eq, sqrt_spacing = False, None
    if all(r is not None for r in roots):
        rs = sorted(roots)
        sqrt_spacing = _spacing(rs)
        sqrt_eq = len(rs) == 1 or sqrt_spacing is not None
    return DiophantineReport(
        all_integer=all(z.denominator == 1 for z in zs),
        equispaced=equispaced,
        spacing=spacing,
        sqrt_neg_equispaced=sqrt_eq,
        sqrt_neg_spacing=sqrt_spacing,
    )
