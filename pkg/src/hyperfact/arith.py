"""Exact rational scalars and shifted factorials.

Every scalar in the package is a :class:`fractions.Fraction`.  The helpers
here build the ordinary and q-shifted factorials, including the products of
conjugate pairs ``(a + i*sqrt(x))_n (a - i*sqrt(x))_n`` and
``(t e^{i theta}; q)_n (t e^{-i theta}; q)_n`` which are real polynomials in
``x`` and therefore never need a complex type.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must be integers or ``p/q``; decimal notation is refused so that
    no value ever enters the library through a binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise ValueError(f"not an exact rational literal: {value!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value: Fraction | int) -> str:
    """Serialize as ``"numerator/denominator"`` (integers get ``/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(a: Fraction, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    _check_count(n)
    a = Fraction(a)
    result = Fraction(1)
    for k in range(n):
        result *= a + k
    return result


def pochhammer_pair(a: Fraction, x: Fraction, n: int) -> Fraction:
    """Return (a + i sqrt(x))_n (a - i sqrt(x))_n = prod_j ((a+j)^2 + x).

    Valid for negative ``x`` too, where the pair degenerates into two real
    rising factorials.
    """
    _check_count(n)
    a, x = Fraction(a), Fraction(x)
    result = Fraction(1)
    for j in range(n):
        result *= (a + j) ** 2 + x
    return result


def q_shifted(a: Fraction, q: Fraction, n: int) -> Fraction:
    """q-shifted factorial (a; q)_n = prod_{k=1}^{n} (1 - a q^{k-1})."""
    _check_count(n)
    a, q = Fraction(a), Fraction(q)
    result = Fraction(1)
    power = Fraction(1)
    for _ in range(n):
        result *= 1 - a * power
        power *= q
    return result


def q_shifted_pair(t: Fraction, x: Fraction, q: Fraction, n: int) -> Fraction:
    """Return (t e^{i theta}; q)_n (t e^{-i theta}; q)_n with x = cos(theta).

    Each factor is ``1 - 2 t x q^{k-1} + t^2 q^{2k-2}``; ``x`` is a formal
    variable and need not lie in [-1, 1].
    """
    _check_count(n)
    t, x, q = Fraction(t), Fraction(x), Fraction(q)
    result = Fraction(1)
    s = t
    for _ in range(n):
        result *= 1 - 2 * x * s + s * s
        s *= q
    return result


def q_power(q: Fraction, k: int) -> Fraction:
    """Exact integer power of q; negative exponents need q != 0."""
    q = Fraction(q)
    if k < 0 and q == 0:
        raise ZeroDivisionError("negative power of q = 0")
    return q**k


def binom2(k: int) -> int:
    """C(k, 2) = k (k-1) / 2, valid for any integer k."""
    return k * (k - 1) // 2


def _check_count(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"factorial length must be a nonnegative integer, got {n!r}")
