"""Seeded random instances for every identity and factorization.

Each trial owns a private :class:`random.Random` seeded from
``(seed, target, index)``, so a trial's outcome does not depend on which
worker ran it or in what order.  Draws that hit a pole are rejected and
redrawn, up to ``MAX_REJECTIONS`` times.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from typing import Callable

from . import askey_wilson as aw
from . import identities as ids
from . import tridiag, wilson
from .arith import format_rational
from .errors import HyperfactError, InvalidSpec, PoleInNormalization, PoleInRHS

MAX_REJECTIONS = 1000
NUM_RANGE = 20
DEN_MAX = 12
Q_DEN_MAX = 8


class SamplingExhausted(RuntimeError):
    """No valid instance was found within the rejection budget."""


def trial_rng(seed: int, target: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{target}:{index}")


def rand_rational(rng: random.Random, num_range: int = NUM_RANGE, den_max: int = DEN_MAX) -> Fraction:
    return Fraction(rng.randint(-num_range, num_range), rng.randint(1, den_max))


def rand_nonzero(rng: random.Random, **kw) -> Fraction:
    while True:
        r = rand_rational(rng, **kw)
        if r:
            return r


def rand_q(rng: random.Random, den_max: int = Q_DEN_MAX) -> Fraction:
    """Rational q strictly inside (0, 1)."""
    den = rng.randint(2, den_max)
    return Fraction(rng.randint(1, den - 1), den)


# Errors meaning "this draw sits on a pole", as opposed to a failed check.
_REJECT = (InvalidSpec, PoleInRHS, PoleInNormalization, ZeroDivisionError)


def _retry(draw: Callable[[random.Random], dict], rng: random.Random) -> dict:
    for _ in range(MAX_REJECTIONS):
        try:
            return draw(rng)
        except _REJECT:
            continue
    raise SamplingExhausted("rejection budget exhausted")


def _fmt_params(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        if isinstance(v, Fraction):
            out[k] = format_rational(v)
        elif isinstance(v, (list, tuple)):
            out[k] = [format_rational(x) if isinstance(x, Fraction) else x for x in v]
        else:
            out[k] = v
    return out


def _identity_record(report: ids.IdentityReport) -> dict:
    d = report.to_json()
    return {"params": d["parameters"], "lhs": d["lhs"], "rhs": d["rhs"], "holds": d["holds"]}


def _factor_record(params: dict, report) -> dict:
    return {"params": _fmt_params(params), "report": report.to_json(), "holds": True}


# -- identity samplers ------------------------------------------------------


def draw_saalschutz(rng, n_max=25):
    n = rng.randint(0, n_max)
    A, B, C = (rand_rational(rng) for _ in range(3))
    return _identity_record(ids.verify_saalschutz(A, B, C, n))


def draw_whipple(rng, n_max=15):
    n = rng.randint(0, n_max)
    A, B, C, D, E = (rand_rational(rng) for _ in range(5))
    return _identity_record(ids.verify_whipple(n, A, B, C, D, E))


def _rand_pairs(rng, r: int, budget: int) -> list:
    pairs = []
    for _ in range(r):
        m = rng.randint(0, max(budget, 0))
        budget -= m
        pairs.append((rand_rational(rng), m))
    return pairs


def draw_karlsson_minton(rng, n_max=15, r_max=3):
    N = rng.randint(1, n_max)
    B = rand_rational(rng)
    pairs = _rand_pairs(rng, rng.randint(0, r_max), N)
    return _identity_record(ids.verify_karlsson_minton(N, B, pairs))


def draw_fields_wimp(rng, n_max=15, r_max=3):
    N = rng.randint(1, n_max)
    pairs = _rand_pairs(rng, rng.randint(0, r_max), N - 1)
    return _identity_record(ids.verify_fields_wimp_vanishing(N, pairs))


def draw_q_saalschutz(rng, n_max=15):
    n = rng.randint(0, n_max)
    q = rand_q(rng)
    A, B, C = (rand_nonzero(rng) for _ in range(3))
    return _identity_record(ids.verify_q_saalschutz(A, B, C, q, n))


def draw_sears(rng, n_max=15):
    n = rng.randint(0, n_max)
    q = rand_q(rng)
    A, B, C, D, E = (rand_nonzero(rng) for _ in range(5))
    return _identity_record(ids.verify_sears(n, A, B, C, D, E, q))


# -- factorization samplers -------------------------------------------------


def draw_wilson_case1(rng, n_max=15):
    n = rng.randint(1, n_max)
    t1, t2, t3 = (rand_rational(rng) for _ in range(3))
    report = wilson.case1_factorize(t1, t2, t3, n)
    return _factor_record({"t1": t1, "t2": t2, "t3": t3, "n": n}, report)


def draw_wilson_case2(rng, n_max=8):
    n = rng.randint(1, n_max)
    m = rng.randint(1, n)
    t1, t2, t4 = (rand_rational(rng) for _ in range(3))
    report = wilson.case2_split(t1, t2, t4, m, n)
    wilson.case2_zeros(t1, t2, t4, m, n)
    return _factor_record({"t1": t1, "t2": t2, "t4": t4, "m": m, "n": n}, report)


def draw_wilson_symmetry(rng, n_max=6):
    n = rng.randint(0, n_max)
    t = tuple(rand_rational(rng) for _ in range(4))
    x = rand_rational(rng)
    values = {wilson.wilson_eval(x, perm, n) for perm in permutations(t)}
    return {
        "params": _fmt_params({"t": list(t), "x": x, "n": n}),
        "value": format_rational(next(iter(values))),
        "holds": len(values) == 1,
    }


def draw_aw_case1(rng, n_max=10):
    n = rng.randint(1, n_max)
    q = rand_q(rng)
    t1, t2, t3 = (rand_nonzero(rng, num_range=8, den_max=8) for _ in range(3))
    report = aw.q_case1_factorize(t1, t2, t3, q, n)
    return _factor_record({"t1": t1, "t2": t2, "t3": t3, "q": q, "n": n}, report)


def draw_aw_case2(rng, n_max=10):
    n = rng.randint(1, n_max)
    m = rng.randint(1, n)
    q = rand_q(rng)
    t1, t2, t4 = (rand_nonzero(rng, num_range=8, den_max=8) for _ in range(3))
    report = aw.q_case2_split(t1, t2, t4, q, m, n)
    aw.q_case2_zeros(t1, t2, t4, q, m, n)
    return _factor_record({"t1": t1, "t2": t2, "t4": t4, "q": q, "m": m, "n": n}, report)


def draw_tridiag(rng, n_max=30):
    N = rng.randint(1, n_max)
    alpha = [rand_rational(rng) for _ in range(N)]
    beta = [rand_rational(rng) for _ in range(N - 1)]
    for k in range(len(beta)):
        if rng.random() < 0.15:
            beta[k] = Fraction(0)
    spec = tridiag.TridiagSpec(tuple(alpha), tuple(beta))
    det = tridiag.det_poly(spec)
    rec = tridiag.recurrence_poly(spec, N)
    pieces = tridiag.split_on_zero_beta(spec)
    prod = pieces[0]
    for piece in pieces[1:]:
        prod = prod * piece
    return {
        "params": spec.to_json(),
        "blocks": len(pieces),
        "holds": det == rec and prod == det and det.degree == N and det.is_monic(),
    }


TARGETS: dict[str, Callable[[random.Random], dict]] = {
    "saalschutz": draw_saalschutz,
    "whipple": draw_whipple,
    "karlsson_minton": draw_karlsson_minton,
    "fields_wimp": draw_fields_wimp,
    "q_saalschutz": draw_q_saalschutz,
    "sears": draw_sears,
    "wilson_case1": draw_wilson_case1,
    "wilson_case2": draw_wilson_case2,
    "wilson_symmetry": draw_wilson_symmetry,
    "aw_case1": draw_aw_case1,
    "aw_case2": draw_aw_case2,
    "tridiag": draw_tridiag,
}


def run_trial(target: str, seed: int, index: int) -> dict:
    """One seeded trial; failures of the checked identity show as ``holds: false``."""
    rng = trial_rng(seed, target, index)
    draw = TARGETS[target]
    try:
        record = _retry(draw, rng)
    except (SamplingExhausted, HyperfactError) as exc:
        record = {"params": {}, "holds": False, "error": f"{type(exc).__name__}: {exc}"}
    return {"identity": target, "trial": index, **record}
