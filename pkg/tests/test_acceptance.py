"""Exit criteria for the package, one test per criterion.

Every criterion prints a PASS/FAIL line (collected into the pytest terminal
summary) with its runtime against the pinned time budget.  All comparisons
are exact; there is no numerical tolerance anywhere.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction as F
from itertools import permutations

from hyperfact import askey_wilson as aw
from hyperfact import wilson
from hyperfact.errors import InvalidSpec, PoleInNormalization, PoleInRHS
from hyperfact.poly import Poly, product
from hyperfact.sampling import rand_q, run_trial
from hyperfact.tridiag import TridiagSpec, det_poly, recurrence_poly, split_on_zero_beta

SEED = 20260101
REJECT = (InvalidSpec, PoleInRHS, PoleInNormalization, ZeroDivisionError)
RESULTS: list[str] = []


def record(number, title, ok, elapsed, budget, detail=""):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"{status} criterion {number:>2}: {title} [{elapsed:.2f}s / {budget}s]"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert elapsed < budget, line


def fuzz_block(target, trials):
    records = [run_trial(target, SEED, i) for i in range(trials)]
    failed = [r for r in records if not r["holds"]]
    return records, failed


def rat(rng, num=20, den=12):
    return F(rng.randint(-num, num), rng.randint(1, den))


def nonzero(rng, num=8, den=8):
    while True:
        v = rat(rng, num, den)
        if v:
            return v


def test_criterion_01_saalschutz():
    t0 = time.perf_counter()
    records, failed = fuzz_block("saalschutz", 200)
    n_max = max(r["params"]["n"] for r in records)
    record(1, "Pfaff-Saalschutz, 200 trials, n <= 25", not failed and n_max <= 25,
           time.perf_counter() - t0, 5, f"failures={len(failed)}")


def test_criterion_02_whipple():
    t0 = time.perf_counter()
    records, failed = fuzz_block("whipple", 100)
    balanced = all(
        F(p["D"]) + F(p["E"]) + F(p["F"]) == F(p["A"]) + F(p["B"]) + F(p["C"]) + 1 - p["n"]
        for p in (r["params"] for r in records)
    )
    n_ok = all(r["params"]["n"] <= 15 for r in records)
    record(2, "Whipple, 100 balanced trials, n <= 15", not failed and balanced and n_ok,
           time.perf_counter() - t0, 10, f"failures={len(failed)}")


def test_criterion_03_karlsson_minton_fields_wimp():
    t0 = time.perf_counter()
    km, km_failed = fuzz_block("karlsson_minton", 50)
    fw, fw_failed = fuzz_block("fields_wimp", 50)
    zero = all(r["lhs"] == "0/1" for r in fw)
    record(3, "Karlsson-Minton (terminating) + Fields-Wimp, 50 each", not km_failed and not fw_failed and zero,
           time.perf_counter() - t0, 5, f"failures={len(km_failed) + len(fw_failed)}")


def test_criterion_04_q_saalschutz_sears():
    t0 = time.perf_counter()
    _, qs_failed = fuzz_block("q_saalschutz", 100)
    sears, sears_failed = fuzz_block("sears", 100)
    q_ok = all(0 < F(r["params"]["q"]) < 1 and r["params"]["n"] <= 15 for r in sears)
    record(4, "q-Saalschutz + Sears, 100 each, q in (0,1), n <= 15", not qs_failed and not sears_failed and q_ok,
           time.perf_counter() - t0, 30, f"failures={len(qs_failed) + len(sears_failed)}")


def test_criterion_05_wilson_case1():
    rng = random.Random(SEED + 5)
    t0 = time.perf_counter()
    done, bad = 0, 0
    while done < 50:
        t1, t2, t3 = rat(rng), rat(rng), rat(rng)
        n = rng.randint(1, 15)
        try:
            monic = wilson.monic_wilson_poly((t1, t2, t3, 1 - n - t3), n)
        except REJECT:
            continue
        diff = monic - product(Poly([(t3 + k - 1) ** 2, 1]) for k in range(1, n + 1))
        bad += not diff.is_zero()
        done += 1
    record(5, "Wilson Case 1 complete factorization, 50 draws, n <= 15", bad == 0,
           time.perf_counter() - t0, 60, f"nonzero differences={bad}")


def _case2_draw(rng, n_max):
    while True:
        t1, t2, t4 = rat(rng), rat(rng), rat(rng)
        try:
            for n in range(1, n_max + 1):
                for m in range(1, n + 1):
                    wilson.wilson_series(0, wilson.case2_params(t1, t2, t4, m, n)).validate()
                    if n <= 8:
                        wilson.wilson_series(0, wilson.case2_cofactor_params(t1, t2, t4, m, n)).validate()
        except REJECT:
            continue
        return t1, t2, t4


def test_criterion_06_wilson_case2():
    rng = random.Random(SEED + 6)
    t0 = time.perf_counter()
    zero_fail = split_fail = checks = 0
    for _ in range(20):
        t1, t2, t4 = _case2_draw(rng, 12)
        for n in range(1, 13):
            for m in range(1, n + 1):
                p = wilson.WilsonParams((t1, t2, -t4 - m + 1, t4), n)
                for j in range(1, m + 1):
                    checks += 1
                    zero_fail += wilson.wilson_eval(-((t4 + j - 1) ** 2), p) != 0
                if n <= 8:
                    report = wilson.case2_split(t1, t2, t4, m, n)
                    direct = wilson.wilson_poly(p)
                    split_fail += report.expand() != direct
    record(6, "Wilson Case 2 zeros (m <= n <= 12) and split (n <= 8), 20 draws",
           zero_fail == 0 and split_fail == 0, time.perf_counter() - t0, 60,
           f"zero checks={checks} zero failures={zero_fail} split failures={split_fail}")


def test_criterion_07_askey_wilson():
    rng = random.Random(SEED + 7)
    t0 = time.perf_counter()
    c1 = c2 = zero_fail = mismatch = 0
    while c1 < 50 or c2 < 50:
        q = rand_q(rng)
        t1, t2, t3 = nonzero(rng), nonzero(rng), nonzero(rng)
        n = rng.randint(1, 10)
        m = rng.randint(1, n)
        if c1 < 50:
            try:
                direct = aw.aw_poly((t1, t2, t3, aw.q_case1_t4(t3, q, n)), q, n)
                report = aw.q_case1_factorize(t1, t2, t3, q, n)
            except REJECT:
                pass
            else:
                c1 += 1
                mismatch += report.expand() != direct
                p = aw.AWParams((t1, t2, t3, aw.q_case1_t4(t3, q, n)), q, n)
                zero_fail += sum(aw.aw_eval(z, p) != 0 for z in aw.q_lattice_zeros(t3, q, n))
        if c2 < 50:
            t4 = t3
            try:
                p = aw.q_case2_params(t1, t2, t4, q, m, n)
                direct = aw.aw_poly(p)
                report = aw.q_case2_split(t1, t2, t4, q, m, n)
            except REJECT:
                continue
            c2 += 1
            mismatch += report.expand() != direct
            zero_fail += sum(aw.aw_eval(z, p) != 0 for z in aw.q_lattice_zeros(t4, q, m))
    record(7, "Askey-Wilson q-Case 1 and q-Case 2, 50 draws each, n <= 10",
           mismatch == 0 and zero_fail == 0, time.perf_counter() - t0, 120,
           f"reconstruction mismatches={mismatch} nonzero lattice values={zero_fail}")


def test_criterion_08_tridiag():
    rng = random.Random(SEED + 8)
    t0 = time.perf_counter()
    bad_equiv = bad_split = 0
    for _ in range(100):
        N = rng.randint(1, 30)
        alpha = [rat(rng) for _ in range(N)]
        beta = [rat(rng) for _ in range(N - 1)]
        spec = TridiagSpec(tuple(alpha), tuple(beta))
        det = det_poly(spec)
        bad_equiv += not (det == recurrence_poly(spec, N) and det.degree == N and det.is_monic())
        if N > 1:
            beta[rng.randrange(N - 1)] = F(0)
            cut = TridiagSpec(tuple(alpha), tuple(beta))
            bad_split += product(split_on_zero_beta(cut)) != det_poly(cut)
    record(8, "det_poly == recurrence_poly and zero-beta split, 100 specs, N <= 30",
           bad_equiv == 0 and bad_split == 0, time.perf_counter() - t0, 5,
           f"equivalence failures={bad_equiv} split failures={bad_split}")


def test_criterion_09_wilson_symmetry():
    rng = random.Random(SEED + 9)
    t0 = time.perf_counter()
    done = bad = 0
    while done < 20:
        t = tuple(rat(rng) for _ in range(4))
        x = rat(rng)
        n = rng.randint(0, 6)
        try:
            values = {wilson.wilson_eval(x, perm, n) for perm in permutations(t)}
        except REJECT:
            continue
        bad += len(values) != 1
        done += 1
    record(9, "Wilson symmetry under all 24 permutations, 20 draws, n <= 6", bad == 0,
           time.perf_counter() - t0, 30, f"asymmetric draws={bad}")


def test_criterion_10_determinism():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "hyperfact", "fuzz", "--trials", "4", "--seed", "99"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    parallel = subprocess.run(cmd + ["--workers", "3"], capture_output=True)
    ok = (
        first.returncode == 0
        and first.stdout
        and first.stdout == second.stdout == parallel.stdout
    )
    record(10, "fuzz with fixed seed is byte-identical across runs", bool(ok),
           time.perf_counter() - t0, 60, f"bytes={len(first.stdout)}")
