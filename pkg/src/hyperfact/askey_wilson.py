"""Askey-Wilson polynomials and their q-lattice factorizations.

``p_n(x; t1..t4 | q) = t1^{-n} (t1 t2; q)_n (t1 t3; q)_n (t1 t4; q)_n`` times a
balanced 4phi3 with the conjugate pair ``t1 e^{+-i theta}``, ``x = cos theta``.
The variable ``x`` is formal: all identities here are polynomial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import binom2, q_shifted
from .errors import FactorizationMismatch, InvalidSpec, ZeroCheckFailed
from .factorization import FactorizationReport, QQuadraticFactor, match_constant
from .poly import Poly, product
from .series import Pair, SeriesSpec, eval_terminating, poly_from_values, qhyp


@dataclass(frozen=True)
class AWParams:
    t: tuple
    q: Fraction
    n: int

    def __post_init__(self):
        t = tuple(Fraction(v) for v in self.t)
        q = Fraction(self.q)
        if len(t) != 4:
            raise ValueError("Askey-Wilson polynomials take exactly four parameters")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {self.n!r}")
        if q in (0, 1, -1):
            raise InvalidSpec(f"base q = {q} is not allowed")
        if t[0] == 0:
            raise InvalidSpec("t1 must be nonzero")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "q", q)

    @property
    def product(self) -> Fraction:
        t1, t2, t3, t4 = self.t
        return t1 * t2 * t3 * t4


def _params(t, q, n) -> AWParams:
    return t if isinstance(t, AWParams) else AWParams(tuple(t), q, n)


def aw_series(x, p: AWParams) -> SeriesSpec:
    t1, t2, t3, t4 = p.t
    q, n = p.q, p.n
    return qhyp(
        [q**-n, p.product * q ** (n - 1), Pair(t1, x)],
        [t1 * t2, t1 * t3, t1 * t4],
        q,
        n,
    )


def aw_prefactor(p: AWParams) -> Fraction:
    t1, t2, t3, t4 = p.t
    q, n = p.q, p.n
    return t1**-n * q_shifted(t1 * t2, q, n) * q_shifted(t1 * t3, q, n) * q_shifted(t1 * t4, q, n)


def aw_eval(x, t, q=None, n: int | None = None) -> Fraction:
    """p_n(x; t | q) at rational ``x``; pass an :class:`AWParams` or ``(t, q, n)``."""
    p = _params(t, q, n)
    return aw_prefactor(p) * eval_terminating(aw_series(x, p))


def aw_poly(t, q=None, n: int | None = None) -> Poly:
    p = _params(t, q, n)
    aw_series(0, p).validate()
    return poly_from_values(lambda x: aw_eval(x, p), p.n)


def aw_leading(p: AWParams) -> Fraction:
    """Coefficient of x^n: 2^n (t1 t2 t3 t4 q^{n-1}; q)_n."""
    return 2**p.n * q_shifted(p.product * p.q ** (p.n - 1), p.q, p.n)


def q_lattice_zeros(t, q, m: int) -> list[Fraction]:
    """[(s + 1/s) / 2 for s = t q^{k-1}, k = 1..m]."""
    t, q = Fraction(t), Fraction(q)
    if t == 0 or q == 0:
        raise ValueError("t and q must be nonzero")
    out = []
    s = t
    for _ in range(m):
        out.append((s + 1 / s) / 2)
        s *= q
    return out


def _q_factors(t, q, m: int) -> tuple:
    return tuple(QQuadraticFactor(Fraction(t), Fraction(q), k) for k in range(1, m + 1))


def q_case1_t4(t3, q, n: int) -> Fraction:
    """t4 making t1 t2 t3 t4 q^{n-1} = t1 t2, i.e. t4 = q^{1-n} / t3."""
    return Fraction(q) ** (1 - n) / Fraction(t3)


def q_case1_constant(t1, t2, t3, q, n: int) -> Fraction:
    """(t1 t2; q)_n (q^{1-n} t1 / t3; q)_n / (t1^n (t3 / t1; q)_n).

    q-Pfaff-Saalschutz applied to the reduced 3phi2.
    """
    t1, t2, t3, q = map(Fraction, (t1, t2, t3, q))
    num = q_shifted(t1 * t2, q, n) * q_shifted(q ** (1 - n) * t1 / t3, q, n)
    den = t1**n * q_shifted(t3 / t1, q, n)
    if den == 0:
        raise ZeroDivisionError("(t3/t1; q)_n vanishes")
    return num / den


def q_case1_factorize(t1, t2, t3, q, n: int) -> FactorizationReport:
    """p_n(x; t1, t2, t3, q^{1-n}/t3) = c * prod_{k=1}^{n} (1 - 2 t3 x q^{k-1} + t3^2 q^{2k-2})."""
    t1, t2, t3, q = map(Fraction, (t1, t2, t3, q))
    if t3 == 0:
        raise InvalidSpec("t3 must be nonzero")
    p = AWParams((t1, t2, t3, q_case1_t4(t3, q, n)), q, n)
    original = aw_poly(p)
    factors = _q_factors(t3, q, n)
    constant = match_constant(original, product(f.poly() for f in factors))
    if q_shifted(t3 / t1, q, n) != 0:
        _agree(constant, q_case1_constant(t1, t2, t3, q, n))
    return FactorizationReport(
        original=original,
        factors=factors,
        constant=constant,
        zeros=tuple(q_lattice_zeros(t3, q, n)),
    ).check()


def _agree(matched: Fraction, closed_form: Fraction) -> None:
    if matched != closed_form:
        raise FactorizationMismatch(
            f"leading-coefficient constant {matched} disagrees with closed form {closed_form}"
        )


def q_case2_params(t1, t2, t4, q, m: int, n: int) -> AWParams:
    t4, q = Fraction(t4), Fraction(q)
    if t4 == 0:
        raise InvalidSpec("t4 must be nonzero")
    return AWParams((t1, t2, q ** (1 - m) / t4, t4), q, n)


def q_case2_cofactor_params(t1, t2, t4, q, m: int, n: int) -> AWParams:
    t4, q = Fraction(t4), Fraction(q)
    return AWParams((t2, t1, q / t4, q**m * t4), q, n - m)


def q_case2_constant(t1, t2, t4, q, m: int, n: int) -> Fraction:
    """Scalar multiplying the q-quadratic block and the degree n-m cofactor.

    From the leading coefficients: (t1 t2 q^{n-m}; q)_m / ((-t4)^m q^{C(m,2)}).
    """
    t1, t2, t4, q = map(Fraction, (t1, t2, t4, q))
    return q_shifted(t1 * t2 * q ** (n - m), q, m) / ((-t4) ** m * q ** binom2(m))


def q_case2_split(t1, t2, t4, q, m: int, n: int) -> FactorizationReport:
    """p_n(x; t1, t2, q^{1-m}/t4, t4) = c * (t4 e^{+-i theta}; q)_m * p_{n-m}(x; t2, t1, q/t4, q^m t4)."""
    if not (isinstance(m, int) and 1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got m = {m}, n = {n}")
    p = q_case2_params(t1, t2, t4, q, m, n)
    t4, q = p.t[3], p.q
    original = aw_poly(p)
    cofactor = aw_poly(q_case2_cofactor_params(t1, t2, t4, q, m, n))
    factors = _q_factors(t4, q, m)
    block = product(f.poly() for f in factors)
    constant = match_constant(original, block * cofactor)
    _agree(constant, q_case2_constant(t1, t2, t4, q, m, n))
    return FactorizationReport(
        original=original,
        factors=factors,
        constant=constant,
        cofactor=cofactor,
        zeros=tuple(q_lattice_zeros(t4, q, m)),
    ).check()


def q_case2_zeros(t1, t2, t4, q, m: int, n: int) -> list[Fraction]:
    """The q-lattice points zeroing p_n(x; t1, t2, q^{1-m}/t4, t4), each checked by direct evaluation."""
    p = q_case2_params(t1, t2, t4, q, m, n)
    zeros = q_lattice_zeros(p.t[3], p.q, m)
    for z in zeros:
        value = aw_eval(z, p)
        if value != 0:
            raise ZeroCheckFailed(f"p_{n} does not vanish at {z}: value {value}")
    return zeros
