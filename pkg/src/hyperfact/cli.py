"""Command-line interface: ``hyperfact <command> ...``.

Exit status is 0 when every check holds, 1 when any check fails and 2 for
malformed input.  Rationals are given as ``p/q`` or integers; negative
values need the ``--flag=-1/4`` form so they are not read as options.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import IO, Any

from . import askey_wilson as aw
from . import identities as ids
from . import tridiag, wilson
from .arith import format_rational, to_rational
from .errors import FactorizationMismatch, HyperfactError, ZeroCheckFailed
from .sampling import TARGETS, run_trial
from .series import SeriesSpec, eval_terminating

SEED_ENV = "HYPERFACT_SEED"
OUTPUTS = ("json", "jsonl", "csv", "pretty")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0
    trials: int = 100
    output: str = "json"


def _rational(text: str):
    try:
        return to_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational_list(text: str):
    if text.strip() == "":
        return []
    return [_rational(part) for part in text.split(",")]


def _pairs(text: str):
    """``B1:m1,B2:m2`` -> [(B1, m1), (B2, m2)]."""
    out = []
    for chunk in filter(None, text.split(",")):
        try:
            b, m = chunk.split(":")
            out.append((to_rational(b), int(m)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad pair {chunk!r}; expected B:m") from exc
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfact",
        description="Exact terminating hypergeometric series, Wilson and Askey-Wilson factorizations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=OUTPUTS, default=argparse.SUPPRESS, help="report format"
    )
    parser.add_argument("--output", choices=OUTPUTS, default=None, help="report format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a terminating series given as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="series JSON text")
    src.add_argument("--spec-file", help="path to a series JSON file ('-' for stdin)")

    p = sub.add_parser("wilson", parents=[common], help="Wilson polynomials")
    p.add_argument(
        "action", choices=["eval", "poly", "monic", "case1", "case2-zeros", "case2-split"]
    )
    for name in ("t1", "t2", "t3", "t4", "x"):
        p.add_argument(f"--{name}", type=_rational)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)

    p = sub.add_parser("askey-wilson", parents=[common], help="Askey-Wilson polynomials")
    p.add_argument(
        "action", choices=["eval", "poly", "case1", "case2-zeros", "case2-split", "lattice"]
    )
    for name in ("t1", "t2", "t3", "t4", "x", "t"):
        p.add_argument(f"--{name}", type=_rational)
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("tridiag", parents=[common], help="tridiagonal characteristic polynomial")
    p.add_argument("--alpha", type=_rational_list)
    p.add_argument("--beta", type=_rational_list, default=[])
    p.add_argument("--spec", help='JSON {"alpha": [...], "beta": [...]}')
    p.add_argument("--zeros", type=_rational_list, help="run the Diophantine check on these zeros")

    p = sub.add_parser("verify", parents=[common], help="check one instance of an identity")
    p.add_argument("identity", choices=sorted(VERIFIERS))
    for name in ("A", "B", "C", "D", "E", "q"):
        p.add_argument(f"--{name}", type=_rational)
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--pairs", type=_pairs, default=[])

    p = sub.add_parser("fuzz", parents=[common], help="seeded randomized verification campaign")
    p.add_argument(
        "--identity",
        action="append",
        choices=sorted(TARGETS) + ["all"],
        help="target to fuzz (repeatable; default all)",
    )
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    return parser


VERIFIERS = {
    "saalschutz": (ids.verify_saalschutz, ("A", "B", "C", "n")),
    "whipple": (ids.verify_whipple, ("n", "A", "B", "C", "D", "E")),
    "karlsson_minton": (ids.verify_karlsson_minton, ("N", "B", "pairs")),
    "fields_wimp": (ids.verify_fields_wimp_vanishing, ("N", "pairs")),
    "q_saalschutz": (ids.verify_q_saalschutz, ("A", "B", "C", "q", "n")),
    "sears": (ids.verify_sears, ("n", "A", "B", "C", "D", "E", "q")),
}


def _need(params: dict, *names: str) -> list:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n for n in missing))
    return [params[n] for n in names]


# -- command implementations; each returns (records, ok) --------------------


def _cmd_eval(params: dict):
    if params.get("spec") is not None:
        text = params["spec"]
    elif params["spec_file"] == "-":
        text = sys.stdin.read()
    else:
        with open(params["spec_file"]) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc
    spec = SeriesSpec.from_json(data)
    return [{"spec": spec.to_json(), "value": format_rational(eval_terminating(spec))}], True


def _poly_record(poly) -> dict:
    return {"poly": str(poly), "coeffs": poly.to_json(), "degree": poly.degree}


def _cmd_wilson(params: dict):
    action, n = params["action"], params["n"]
    if action in ("eval", "poly", "monic"):
        t = _need(params, "t1", "t2", "t3", "t4")
        if action == "eval":
            (x,) = _need(params, "x")
            return [{"value": format_rational(wilson.wilson_eval(x, t, n))}], True
        poly = wilson.wilson_poly(t, n) if action == "poly" else wilson.monic_wilson_poly(t, n)
        return [_poly_record(poly)], True
    if action == "case1":
        t1, t2, t3 = _need(params, "t1", "t2", "t3")
        report = wilson.case1_factorize(t1, t2, t3, n)
        return [{"t4": format_rational(1 - n - t3), **report.to_json()}], True
    t1, t2, t4, m = _need(params, "t1", "t2", "t4", "m")
    if action == "case2-zeros":
        zeros = wilson.case2_zeros(t1, t2, t4, m, n)
        return [{"zeros": [format_rational(z) for z in zeros], "verified": True}], True
    report = wilson.case2_split(t1, t2, t4, m, n)
    return [{"t3": format_rational(1 - m - t4), **report.to_json()}], True


def _cmd_askey_wilson(params: dict):
    action, q, n = params["action"], params["q"], params.get("n")
    if action == "lattice":
        t, m = _need(params, "t", "m")
        zeros = aw.q_lattice_zeros(t, q, m)
        return [{"zeros": [format_rational(z) for z in zeros]}], True
    if n is None:
        raise UsageError("missing required option(s): --n")
    if action in ("eval", "poly"):
        t = _need(params, "t1", "t2", "t3", "t4")
        if action == "eval":
            (x,) = _need(params, "x")
            return [{"value": format_rational(aw.aw_eval(x, t, q, n))}], True
        return [_poly_record(aw.aw_poly(t, q, n))], True
    if action == "case1":
        t1, t2, t3 = _need(params, "t1", "t2", "t3")
        report = aw.q_case1_factorize(t1, t2, t3, q, n)
        return [{"t4": format_rational(aw.q_case1_t4(t3, q, n)), **report.to_json()}], True
    t1, t2, t4, m = _need(params, "t1", "t2", "t4", "m")
    if action == "case2-zeros":
        zeros = aw.q_case2_zeros(t1, t2, t4, q, m, n)
        return [{"zeros": [format_rational(z) for z in zeros], "verified": True}], True
    report = aw.q_case2_split(t1, t2, t4, q, m, n)
    return [{"t3": format_rational(q ** (1 - m) / t4), **report.to_json()}], True


def _cmd_tridiag(params: dict):
    if params.get("zeros") is not None and params.get("alpha") is None and params.get("spec") is None:
        if not params["zeros"]:
            raise UsageError("--zeros needs at least one value")
        return [tridiag.diophantine_check(params["zeros"]).to_json()], True
    if params.get("spec") is not None:
        try:
            spec = tridiag.TridiagSpec.from_json(json.loads(params["spec"]))
        except (json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"invalid tridiagonal spec: {exc}") from exc
    else:
        (alpha,) = _need(params, "alpha")
        spec = tridiag.TridiagSpec(tuple(alpha), tuple(params.get("beta") or ()))
    det = tridiag.det_poly(spec)
    rec = tridiag.recurrence_poly(spec, spec.N)
    pieces = tridiag.split_on_zero_beta(spec)
    prod = pieces[0]
    for piece in pieces[1:]:
        prod = prod * piece
    record = {
        **_poly_record(det),
        "recurrence_agrees": rec == det,
        "blocks": [str(p) for p in pieces],
        "block_product_agrees": prod == det,
    }
    if params.get("zeros"):
        record["diophantine"] = tridiag.diophantine_check(params["zeros"]).to_json()
    return [record], record["recurrence_agrees"] and record["block_product_agrees"]


def _cmd_verify(params: dict):
    fn, names = VERIFIERS[params["identity"]]
    args = _need(params, *names)
    report = fn(*args)
    return [report.to_json()], report.holds


def _fuzz_targets(params: dict) -> list[str]:
    chosen = params.get("identity") or ["all"]
    if "all" in chosen:
        return list(TARGETS)
    seen = []
    for name in chosen:
        if name not in seen:
            seen.append(name)
    return seen


def _cmd_fuzz(params: dict, seed: int, trials: int):
    if trials < 1:
        raise UsageError("--trials must be positive")
    jobs = [(t, i) for t in _fuzz_targets(params) for i in range(trials)]
    workers = max(int(params.get("workers") or 1), 1)
    if workers == 1:
        records = [run_trial(t, seed, i) for t, i in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_job, jobs, [seed] * len(jobs), chunksize=8))
    return records, all(r["holds"] for r in records)


def _run_job(job, seed):
    target, index = job
    return run_trial(target, seed, index)


def _summary(records: list[dict]) -> dict:
    counts: dict[str, dict[str, int]] = {}
    for r in records:
        c = counts.setdefault(r["identity"], {"passed": 0, "failed": 0})
        c["passed" if r["holds"] else "failed"] += 1
    return {"summary": counts, "all_hold": all(r["holds"] for r in records)}


# -- output -----------------------------------------------------------------


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def emit(records: list[dict], config: RunConfig, out: IO[str], err: IO[str]) -> None:
    fmt = config.output
    is_fuzz = config.command == "fuzz"
    if fmt == "json":
        doc: Any = {"records": records, **_summary(records)} if is_fuzz else records[0]
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    elif fmt == "jsonl":
        for r in records:
            out.write(_dump(r) + "\n")
        if is_fuzz:
            err.write(_dump(_summary(records)) + "\n")
    elif fmt == "csv":
        _emit_csv(records, out)
        if is_fuzz:
            err.write(_dump(_summary(records)) + "\n")
    else:
        for r in records:
            out.write(_pretty(r) + "\n")
        if is_fuzz:
            for name, c in _summary(records)["summary"].items():
                out.write(f"{name}: {c['passed']} passed, {c['failed']} failed\n")


def _emit_csv(records: list[dict], out: IO[str]) -> None:
    scalar_keys: list[str] = []
    for r in records:
        for k in r:
            if k not in scalar_keys:
                scalar_keys.append(k)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(scalar_keys)
    for r in records:
        row = []
        for k in scalar_keys:
            v = r.get(k, "")
            row.append(_dump(v) if isinstance(v, (dict, list)) else v)
        writer.writerow(row)


def _pretty(record: dict) -> str:
    parts = []
    for k, v in record.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, list):
            v = "[" + ", ".join(str(x) if not isinstance(x, dict) else _dump(x) for x in v) + "]"
        parts.append(f"{k}: {v}")
    return "  ".join(parts)


# -- entry points -----------------------------------------------------------


def run(config: RunConfig, out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    """Execute a parsed configuration, write its report and return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    params = config.parameters
    try:
        if config.command == "eval":
            records, ok = _cmd_eval(params)
        elif config.command == "wilson":
            records, ok = _cmd_wilson(params)
        elif config.command == "askey-wilson":
            records, ok = _cmd_askey_wilson(params)
        elif config.command == "tridiag":
            records, ok = _cmd_tridiag(params)
        elif config.command == "verify":
            records, ok = _cmd_verify(params)
        elif config.command == "fuzz":
            records, ok = _cmd_fuzz(params, config.seed, config.trials)
        else:
            raise UsageError(f"unknown command {config.command!r}")
    except UsageError as exc:
        err.write(f"hyperfact: error: {exc}\n")
        return 2
    except (FactorizationMismatch, ZeroCheckFailed) as exc:
        err.write(f"hyperfact: check failed: {exc}\n")
        return 1
    except (HyperfactError, ValueError, ZeroDivisionError, OSError) as exc:
        err.write(f"hyperfact: error: {type(exc).__name__}: {exc}\n")
        return 2
    emit(records, config, out, err)
    return 0 if ok else 1


def config_from_args(argv: list[str] | None = None, environ=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    environ = os.environ if environ is None else environ
    params = {k: v for k, v in vars(args).items() if k not in ("command", "output", "seed", "trials")}
    seed = getattr(args, "seed", 0)
    if environ.get(SEED_ENV):
        try:
            seed = int(environ[SEED_ENV])
        except ValueError:
            build_parser().error(f"{SEED_ENV} must be an integer")
    default_output = "jsonl" if args.command == "fuzz" else "json"
    return RunConfig(
        command=args.command,
        parameters=params,
        seed=seed,
        trials=getattr(args, "trials", 1),
        output=args.output or default_output,
    )


def main(argv: list[str] | None = None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
