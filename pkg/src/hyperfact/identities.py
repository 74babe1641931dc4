"""Closed forms and exact verifiers for classical summation and transformation formulas.

Each ``verify_*`` function evaluates both sides exactly and returns an
:class:`IdentityReport`.  The formulas are theorems, so ``holds`` is false
only if the library itself is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .arith import format_rational, pochhammer, q_shifted
from .errors import PoleInRHS
from .series import eval_terminating, hyp, qhyp


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    parameter_assignment: dict = field(default_factory=dict)
    lhs: Fraction = Fraction(0)
    rhs: Fraction = Fraction(0)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "identity": self.identity_name,
            "parameters": {
                k: (v if isinstance(v, int) else format_rational(v))
                for k, v in self.parameter_assignment.items()
            },
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
        }


def _nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise PoleInRHS(f"{what} vanishes")
    return value


# -- Pfaff-Saalschutz -------------------------------------------------------


def saalschutz_rhs(A, B, C, n: int) -> Fraction:
    """(C-A)_n (C-B)_n / ((C)_n (C-A-B)_n)."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    den = _nonzero(pochhammer(C, n), "(C)_n") * _nonzero(pochhammer(C - A - B, n), "(C-A-B)_n")
    return pochhammer(C - A, n) * pochhammer(C - B, n) / den


def saalschutz_series(A, B, C, n: int):
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    return hyp([-n, A, B], [C, 1 + A + B - n - C], n)


def verify_saalschutz(A, B, C, n: int) -> IdentityReport:
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    lhs = eval_terminating(saalschutz_series(A, B, C, n))
    rhs = saalschutz_rhs(A, B, C, n)
    return IdentityReport("saalschutz", {"A": A, "B": B, "C": C, "n": n}, lhs, rhs)


# -- Karlsson-Minton / Fields-Wimp -----------------------------------------


def _pairs(pairs) -> list[tuple[Fraction, int]]:
    out = []
    for b, m in pairs:
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"integer excess must be a nonnegative integer, got {m!r}")
        out.append((Fraction(b), m))
    return out


def karlsson_minton_terminating_rhs(N: int, B, pairs: Sequence = ()) -> Fraction:
    """N! / (B+1)_N * prod_j (B_j - B)_{m_j} / (B_j)_{m_j}.

    This is the Gamma-ratio closed form at A = -N, where
    Gamma(B+1) Gamma(1+N) / Gamma(1+B+N) collapses to N!/(B+1)_N.
    """
    B = Fraction(B)
    pairs = _pairs(pairs)
    value = Fraction(factorial(N)) / _nonzero(pochhammer(B + 1, N), "(B+1)_N")
    for bj, mj in pairs:
        value *= pochhammer(bj - B, mj) / _nonzero(pochhammer(bj, mj), f"({bj})_{mj}")
    return value


def karlsson_minton_series(N: int, B, pairs: Sequence = ()):
    B = Fraction(B)
    pairs = _pairs(pairs)
    num = [-N, B] + [bj + mj for bj, mj in pairs]
    den = [B + 1] + [bj for bj, _ in pairs]
    return hyp(num, den, N)


def _pair_assignment(pairs) -> dict:
    out = {}
    for j, (bj, mj) in enumerate(pairs, start=1):
        out[f"B{j}"] = bj
        out[f"m{j}"] = mj
    return out


def verify_karlsson_minton(N: int, B, pairs: Sequence = ()) -> IdentityReport:
    B = Fraction(B)
    pairs = _pairs(pairs)
    if sum(m for _, m in pairs) > N:
        raise ValueError("total integer excess exceeds the termination index")
    lhs = eval_terminating(karlsson_minton_series(N, B, pairs))
    rhs = karlsson_minton_terminating_rhs(N, B, pairs)
    return IdentityReport(
        "karlsson_minton", {"N": N, "B": B, **_pair_assignment(pairs)}, lhs, rhs
    )


def fields_wimp_series(N: int, pairs: Sequence = ()):
    pairs = _pairs(pairs)
    return hyp([-N] + [bj + mj for bj, mj in pairs], [bj for bj, _ in pairs], N)


def verify_fields_wimp_vanishing(N: int, pairs: Sequence = ()) -> IdentityReport:
    """(r+1)F(r)(-N, B_j + m_j; B_j; 1) = 0 whenever N > sum m_j."""
    pairs = _pairs(pairs)
    if N <= sum(m for _, m in pairs):
        raise ValueError("vanishing requires N > m_1 + ... + m_r")
    lhs = eval_terminating(fields_wimp_series(N, pairs))
    return IdentityReport("fields_wimp", {"N": N, **_pair_assignment(pairs)}, lhs, Fraction(0))


# -- Whipple ---------------------------------------------------------------


def whipple_balance(n: int, A, B, C, D, E) -> Fraction:
    """F fixed by D + E + F = A + B + C + 1 - n."""
    return Fraction(A) + B + C + 1 - n - D - E


def verify_whipple(n: int, A, B, C, D, E) -> IdentityReport:
    A, B, C, D, E = map(Fraction, (A, B, C, D, E))
    F = whipple_balance(n, A, B, C, D, E)
    lhs = eval_terminating(hyp([-n, A, B, C], [D, E, F], n))
    pref_den = _nonzero(pochhammer(E, n), "(E)_n") * _nonzero(pochhammer(F, n), "(F)_n")
    prefactor = pochhammer(E - A, n) * pochhammer(F - A, n) / pref_den
    other = eval_terminating(hyp([-n, A, D - B, D - C], [D, A + 1 - n - E, A + 1 - n - F], n))
    return IdentityReport(
        "whipple",
        {"n": n, "A": A, "B": B, "C": C, "D": D, "E": E, "F": F},
        lhs,
        prefactor * other,
    )


# -- q-analogues -----------------------------------------------------------


def q_saalschutz_rhs(A, B, C, q, n: int) -> Fraction:
    """(C/A;q)_n (C/B;q)_n / ((C;q)_n (C/AB;q)_n)."""
    A, B, C, q = map(Fraction, (A, B, C, q))
    den = _nonzero(q_shifted(C, q, n), "(C;q)_n") * _nonzero(
        q_shifted(C / (A * B), q, n), "(C/AB;q)_n"
    )
    return q_shifted(C / A, q, n) * q_shifted(C / B, q, n) / den


def verify_q_saalschutz(A, B, C, q, n: int) -> IdentityReport:
    A, B, C, q = map(Fraction, (A, B, C, q))
    lhs = eval_terminating(qhyp([q**-n, A, B], [C, q ** (1 - n) * A * B / C], q, n))
    rhs = q_saalschutz_rhs(A, B, C, q, n)
    return IdentityReport("q_saalschutz", {"A": A, "B": B, "C": C, "q": q, "n": n}, lhs, rhs)


def sears_balance(n: int, A, B, C, D, E, q) -> Fraction:
    """F fixed by D E F = q^{1-n} A B C."""
    return Fraction(q) ** (1 - n) * A * B * C / (Fraction(D) * E)


def verify_sears(n: int, A, B, C, D, E, q) -> IdentityReport:
    A, B, C, D, E, q = map(Fraction, (A, B, C, D, E, q))
    F = sears_balance(n, A, B, C, D, E, q)
    lhs = eval_terminating(qhyp([q**-n, A, B, C], [D, E, F], q, n))
    pref_den = _nonzero(q_shifted(E, q, n), "(E;q)_n") * _nonzero(q_shifted(F, q, n), "(F;q)_n")
    prefactor = A**n * q_shifted(E / A, q, n) * q_shifted(F / A, q, n) / pref_den
    other = eval_terminating(
        qhyp([q**-n, A, D / B, D / C], [D, q ** (1 - n) * A / E, q ** (1 - n) * A / F], q, n)
    )
    return IdentityReport(
        "sears",
        {"n": n, "A": A, "B": B, "C": C, "D": D, "E": E, "F": F, "q": q},
        lhs,
        prefactor * other,
    )
