"""Wilson polynomials and their explicit factorizations.

``W_n(x; t1, t2, t3, t4)`` is ``(t1+t2)_n (t1+t3)_n (t1+t4)_n`` times a
balanced 4F3 whose conjugate pair ``t1 +- i sqrt(x)`` makes every term a
polynomial in ``x``.  Two parameter families factor explicitly:

* ``t4 = 1 - n - t3`` sums the series outright and the monic polynomial is
  ``prod_{k=1}^{n} (x + (t3 + k - 1)^2)``;
* ``t3 = 1 - m - t4`` splits off ``prod_{j=0}^{m-1} (x + (t4 + j)^2)`` with a
  Wilson polynomial of degree ``n - m`` as cofactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import pochhammer
from .errors import FactorizationMismatch, PoleInNormalization, ZeroCheckFailed
from .factorization import FactorizationReport, ShiftedSquareFactor, match_constant
from .series import Pair, SeriesSpec, eval_terminating, hyp, poly_from_values
from .poly import Poly, product


@dataclass(frozen=True)
class WilsonParams:
    t: tuple
    n: int

    def __post_init__(self):
        t = tuple(Fraction(v) for v in self.t)
        if len(t) != 4:
            raise ValueError("Wilson polynomials take exactly four parameters")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "t", t)

    @property
    def total(self) -> Fraction:
        return sum(self.t, Fraction(0))


def _params(t, n) -> WilsonParams:
    return t if isinstance(t, WilsonParams) else WilsonParams(tuple(t), n)


def wilson_series(x, p: WilsonParams) -> SeriesSpec:
    t1, t2, t3, t4 = p.t
    n = p.n
    return hyp([-n, p.total + n - 1, Pair(t1, x)], [t1 + t2, t1 + t3, t1 + t4], n)


def wilson_prefactor(p: WilsonParams) -> Fraction:
    t1 = p.t[0]
    return pochhammer(t1 + p.t[1], p.n) * pochhammer(t1 + p.t[2], p.n) * pochhammer(t1 + p.t[3], p.n)


def wilson_eval(x, t, n: int | None = None) -> Fraction:
    """W_n(x; t) evaluated exactly at rational ``x``.

    ``t`` is either a :class:`WilsonParams` or a 4-tuple, in which case ``n``
    is required.
    """
    p = _params(t, n)
    return wilson_prefactor(p) * eval_terminating(wilson_series(x, p))


def wilson_poly(t, n: int | None = None) -> Poly:
    """W_n(.; t) as an explicit polynomial in x."""
    p = _params(t, n)
    spec = wilson_series(0, p)
    spec.validate()
    return poly_from_values(lambda x: wilson_eval(x, p), p.n)


def wilson_leading(p: WilsonParams) -> Fraction:
    """Coefficient of x^n in W_n: (-1)^n (n + t1 + t2 + t3 + t4 - 1)_n."""
    return (-1) ** p.n * pochhammer(p.n + p.total - 1, p.n)


def monic_wilson_poly(t, n: int | None = None) -> Poly:
    p = _params(t, n)
    norm = pochhammer(p.n + p.total - 1, p.n)
    if norm == 0:
        raise PoleInNormalization(f"(n + sum t - 1)_n vanishes for t = {p.t}, n = {p.n}")
    return wilson_poly(p) * (Fraction((-1) ** p.n) / norm)


def case1_factorize(t1, t2, t3, n: int) -> FactorizationReport:
    """Complete factorization of the monic W_n(x; t1, t2, t3, 1 - n - t3)."""
    t1, t2, t3 = map(Fraction, (t1, t2, t3))
    original = monic_wilson_poly((t1, t2, t3, 1 - n - t3), n)
    factors = tuple(ShiftedSquareFactor(t3 + k - 1) for k in range(1, n + 1))
    return FactorizationReport(
        original=original,
        factors=factors,
        constant=Fraction(1),
        zeros=tuple(f.zero for f in factors),
    ).check()


def case2_params(t1, t2, t4, m: int, n: int) -> WilsonParams:
    t4 = Fraction(t4)
    return WilsonParams((t1, t2, 1 - m - t4, t4), n)


def _check_m(m: int, n: int) -> None:
    if not (isinstance(m, int) and 1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got m = {m}, n = {n}")


def case2_zeros(t1, t2, t4, m: int, n: int) -> list[Fraction]:
    """The m zeros -(t4 + j - 1)^2 of W_n(x; t1, t2, 1 - m - t4, t4), each checked."""
    _check_m(m, n)
    p = case2_params(t1, t2, t4, m, n)
    t4 = p.t[3]
    zeros = [-((t4 + j - 1) ** 2) for j in range(1, m + 1)]
    for z in zeros:
        value = wilson_eval(z, p)
        if value != 0:
            raise ZeroCheckFailed(f"W_{n} does not vanish at {z}: value {value}")
    return zeros


def case2_cofactor_params(t1, t2, t4, m: int, n: int) -> WilsonParams:
    t4 = Fraction(t4)
    return WilsonParams((t2, t1, 1 - t4, t4 + m), n - m)


def case2_split_constant(t1, t2, m: int, n: int) -> Fraction:
    """Closed form of the split constant from the two leading coefficients.

    W_n has leading coefficient (-1)^n (n + t1 + t2 - m)_n and the cofactor
    (-1)^(n-m) (n + t1 + t2)_(n-m); the factor block is monic.
    """
    t1, t2 = Fraction(t1), Fraction(t2)
    return (-1) ** m * pochhammer(n + t1 + t2 - m, n) / pochhammer(n + t1 + t2, n - m)


def case2_split(t1, t2, t4, m: int, n: int) -> FactorizationReport:
    """W_n(x; t1, t2, 1-t4-m, t4) = c * prod_{j<m} (x + (t4+j)^2) * W_{n-m}(x; t2, t1, 1-t4, t4+m)."""
    _check_m(m, n)
    p = case2_params(t1, t2, t4, m, n)
    t4 = p.t[3]
    original = wilson_poly(p)
    cofactor = wilson_poly(case2_cofactor_params(t1, t2, t4, m, n))
    factors = tuple(ShiftedSquareFactor(t4 + j) for j in range(m))
    block = product(f.poly() for f in factors)
    constant = match_constant(original, block * cofactor)
    closed_form = case2_split_constant(t1, t2, m, n)
    if constant != closed_form:
        raise FactorizationMismatch(
            f"leading-coefficient constant {constant} disagrees with closed form {closed_form}"
        )
    return FactorizationReport(
        original=original,
        factors=factors,
        constant=constant,
        cofactor=cofactor,
        zeros=tuple(f.zero for f in factors),
    ).check()
