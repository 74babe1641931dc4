"""Terminating generalized and basic hypergeometric series.

A :class:`SeriesSpec` lists numerator parameters (plain rationals or
conjugate pairs), denominator parameters, the argument ``z`` and, for basic
series, the base ``q``.  Evaluation walks the term ratio forward from
``term_0 = 1`` and stops after ``n + 1`` terms, where ``n`` is the
termination index carried by a numerator parameter ``-n`` (ordinary) or
``q^{-n}`` (basic).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .arith import format_rational, to_rational
from .errors import InvalidSpec
from .poly import Poly, interpolate


class SeriesKind(str, enum.Enum):
    ORDINARY = "ordinary"
    BASIC = "basic"


class PairKind(str, enum.Enum):
    ORDINARY_PAIR = "ordinary_pair"
    Q_PAIR = "q_pair"


@dataclass(frozen=True)
class Pair:
    """Conjugate pair a +- i sqrt(x) (ordinary) or t e^{+-i theta}, x = cos theta (basic).

    Occupies two numerator slots.
    """

    base: Fraction
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "x", Fraction(self.x))


Param = Union[Fraction, Pair]


@dataclass(frozen=True)
class SeriesSpec:
    kind: SeriesKind
    num: tuple
    den: tuple
    z: Fraction
    n: int
    q: Fraction | None = None

    def __post_init__(self):
        kind = SeriesKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(
            self, "num", tuple(p if isinstance(p, Pair) else Fraction(p) for p in self.num)
        )
        object.__setattr__(self, "den", tuple(Fraction(b) for b in self.den))
        object.__setattr__(self, "z", Fraction(self.z))
        if self.q is not None:
            object.__setattr__(self, "q", Fraction(self.q))

    @property
    def pair_kind(self) -> PairKind:
        return PairKind.Q_PAIR if self.kind is SeriesKind.BASIC else PairKind.ORDINARY_PAIR

    @property
    def arity(self) -> tuple[int, int]:
        """(p, s): numerator slot count (pairs count twice) and denominator count."""
        p = sum(2 if isinstance(a, Pair) else 1 for a in self.num)
        return p, len(self.den)

    def validate(self) -> None:
        """Raise InvalidSpec unless the series terminates at index ``n`` without poles."""
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InvalidSpec(f"termination index must be a nonnegative integer, got {n!r}")
        plain = [a for a in self.num if not isinstance(a, Pair)]
        if self.kind is SeriesKind.ORDINARY:
            if self.q is not None:
                raise InvalidSpec("ordinary series takes no base q")
            if -n not in plain:
                raise InvalidSpec(f"no numerator parameter equals -{n}")
            for b in self.den:
                if b.denominator == 1 and -(n - 1) <= b <= 0:
                    raise InvalidSpec(f"denominator parameter {b} has a pole within 0..{n}")
            return
        q = self.q
        if q is None:
            raise InvalidSpec("basic series needs a base q")
        if q == 0 or q == 1 or q == -1:
            raise InvalidSpec(f"base q = {q} is not allowed")
        p, s = self.arity
        if p != s + 1:
            raise InvalidSpec(f"basic series must be {s + 1}phi{s}, got {p} numerator slots")
        if q**-n not in plain:
            raise InvalidSpec(f"no numerator parameter equals q^-{n}")
        for b in self.den:
            power = Fraction(1)
            for _ in range(n):
                if b * power == 1:
                    raise InvalidSpec(f"denominator parameter {b} makes (b;q)_k vanish for k <= {n}")
                power *= q

    def terms(self) -> list[Fraction]:
        """The n + 1 terms of the series, by forward ratio recursion."""
        self.validate()
        if self.kind is SeriesKind.ORDINARY:
            ratio = self._ordinary_ratio
        else:
            ratio = self._basic_ratio
        out = [Fraction(1)]
        term = Fraction(1)
        for k in range(self.n):
            term = term * ratio(k)
            out.append(term)
            if term == 0:
                out.extend([Fraction(0)] * (self.n - k - 1))
                break
        return out

    def _ordinary_ratio(self, k: int) -> Fraction:
        top = Fraction(1)
        for a in self.num:
            if isinstance(a, Pair):
                top *= (a.base + k) ** 2 + a.x
            else:
                top *= a + k
        bottom = Fraction(k + 1)
        for b in self.den:
            bottom *= b + k
        return top * self.z / bottom

    def _basic_ratio(self, k: int) -> Fraction:
        qk = self.q**k
        top = Fraction(1)
        for a in self.num:
            if isinstance(a, Pair):
                s = a.base * qk
                top *= 1 - 2 * a.x * s + s * s
            else:
                top *= 1 - a * qk
        bottom = 1 - qk * self.q
        for b in self.den:
            bottom *= 1 - b * qk
        return top * self.z / bottom

    def to_json(self) -> dict:
        def enc(a):
            if isinstance(a, Pair):
                return {"pair": {"base": format_rational(a.base), "x": format_rational(a.x)}}
            return {"plain": format_rational(a)}

        return {
            "kind": self.kind.value,
            "num": [enc(a) for a in self.num],
            "den": [format_rational(b) for b in self.den],
            "z": format_rational(self.z),
            "q": None if self.q is None else format_rational(self.q),
            "n": self.n,
        }

    @classmethod
    def from_json(cls, data: dict) -> SeriesSpec:
        try:
            num = []
            for entry in data["num"]:
                if "pair" in entry:
                    pair = entry["pair"]
                    num.append(Pair(to_rational(pair["base"]), to_rational(pair["x"])))
                else:
                    num.append(to_rational(entry["plain"]))
            q = data.get("q")
            return cls(
                kind=SeriesKind(data["kind"]),
                num=tuple(num),
                den=tuple(to_rational(b) for b in data["den"]),
                z=to_rational(data.get("z", "1/1")),
                n=int(data["n"]),
                q=None if q is None else to_rational(q),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed series JSON: {exc}") from exc


def hyp(num: Sequence[Param], den: Sequence, n: int, z=1) -> SeriesSpec:
    """Ordinary terminating pFq with termination index ``n``."""
    return SeriesSpec(SeriesKind.ORDINARY, tuple(num), tuple(den), Fraction(z), n)


def qhyp(num: Sequence[Param], den: Sequence, q, n: int, z=None) -> SeriesSpec:
    """Basic terminating r+1 phi r; ``z`` defaults to ``q``."""
    q = Fraction(q)
    return SeriesSpec(SeriesKind.BASIC, tuple(num), tuple(den), q if z is None else Fraction(z), n, q)


def eval_terminating(spec: SeriesSpec) -> Fraction:
    """Exact value of a terminating series; raises InvalidSpec before any term is computed."""
    return sum(spec.terms(), Fraction(0))


def eval_terminating_poly(template: Callable[[Fraction], SeriesSpec], degree: int) -> Poly:
    """Recover the polynomial x -> eval_terminating(template(x)) of known degree.

    Evaluates at the integer nodes 0..degree and interpolates exactly.
    """
    return poly_from_values(lambda x: eval_terminating(template(x)), degree)


def poly_from_values(f: Callable[[Fraction], Fraction], degree: int) -> Poly:
    """Interpolate a function known to be a polynomial of degree <= ``degree``."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    nodes = [Fraction(k) for k in range(degree + 1)]
    return interpolate(nodes, [f(x) for x in nodes])
