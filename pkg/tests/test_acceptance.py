"""Acceptance gate: eight end-to-end criteria, each with a wall-clock limit.

Runs under pytest (one test per criterion) or directly with
``python3 tests/test_acceptance.py``; either way one PASS/FAIL line is
printed per criterion.
"""

import random
import sys
import time
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import FIG8, GIESEKING, PI_TEXT, LOCAL_PAIR, TREFOIL, TREFOIL_TEXT, BruteConjugacy, unimodular_sweep  # noqa: E402
from pfrigid.fpgroups import (  # noqa: E402
    abelianization,
    build_catalog_group,
    compare_fingerprints,
    epimorphism_count,
    parse_presentation,
    quotient_fingerprint,
)
from pfrigid.gl2z import Kind, classify, enumerate_classes, is_conjugate_z, local_conjugacy  # noqa: E402
from pfrigid.mapping_torus import B1OneIdentity, b1_profile, h1, identify_b1_one, presentation_of  # noqa: E402
from pfrigid.zlinalg import IntMatrix, smith_normal_form  # noqa: E402


def census_uniqueness():
    worst = 0.0
    for (t, d), target in {(3, 1): FIG8, (1, 1): TREFOIL, (1, -1): GIESEKING}.items():
        start = time.perf_counter()
        reps = enumerate_classes(t, d)
        ok = len(reps) == 1 and is_conjugate_z(reps[0], target).conjugate
        worst = max(worst, time.perf_counter() - start)
        if not ok:
            return False, f"({t},{d}) gave {[str(r) for r in reps]}"
        if worst >= 1.0:
            return False, f"({t},{d}) took {worst:.2f}s"
    return True, f"slowest case {worst * 1000:.1f}ms"


def homology_formula():
    sweep = unimodular_sweep(-3, 3)
    for m in sweep:
        hm = h1(m)
        if abelianization(presentation_of(m)) != hm:
            return False, f"abelianization mismatch at {m}"
        if (hm.b1 == 1) != (1 + m.det - m.trace != 0):
            return False, f"b1 criterion fails at {m}"
    return True, f"{len(sweep)} matrices"


def hyperbolicity_criterion():
    sweep = unimodular_sweep(-3, 3)
    for m in sweep:
        if (classify(m).kind is Kind.HYPERBOLIC) != (b1_profile(m, 12) == (1,) * 12):
            return False, f"mismatch at {m}"
    return True, f"{len(sweep)} matrices"


def d10_separation():
    pi, tref = parse_presentation(PI_TEXT), parse_presentation(TREFOIL_TEXT)
    d10 = build_catalog_group("dihedral:10")
    n_pi = epimorphism_count(pi, d10).count
    n_t = epimorphism_count(tref, d10).count
    diff = compare_fingerprints(quotient_fingerprint(pi), quotient_fingerprint(tref))
    ok = n_pi > 0 and n_t == 0 and diff.distinguished and "dihedral:10" in diff.difference
    return ok, f"epi counts {n_pi}/{n_t}, diff {', '.join(diff.difference)}"


def local_pair():
    rep = local_conjugacy(*LOCAL_PAIR, 200)
    z = is_conjugate_z(*LOCAL_PAIR)
    return rep.all_pass and not z.conjugate, f"local failures {list(rep.failures)}, Z-conjugate {z.conjugate}"


def oracle_equivalence():
    brute = BruteConjugacy(6)
    buckets = defaultdict(list)
    for m in unimodular_sweep(-4, 4):
        buckets[m.trace, m.det].append(m)
    pairs = 0
    for ms in buckets.values():
        for phi in ms:
            orbit = brute.orbit(phi)
            for psi in ms:
                pairs += 1
                if is_conjugate_z(phi, psi).conjugate != (psi.tuple() in orbit):
                    return False, f"disagree on {phi} vs {psi}"
    return True, f"{pairs} ordered pairs"


def snf_suite():
    rng = random.Random(7)
    for _ in range(500):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])
        res = smith_normal_form(a)
        d = res.diagonal
        if res.u @ a @ res.v != res.d:
            return False, f"u a v != d for {a.to_rows()}"
        if res.u.det() not in (1, -1) or res.v.det() not in (1, -1):
            return False, f"non-unimodular transform for {a.to_rows()}"
        if any(res.d[i, j] for i in range(n) for j in range(m) if i != j):
            return False, f"off-diagonal entry for {a.to_rows()}"
        if any(x < 0 for x in d) or any(y and (not x or y % x) for x, y in zip(d, d[1:])):
            return False, f"divisibility fails for {a.to_rows()}"
    return True, "500 instances"


def identification():
    named = {FIG8: B1OneIdentity.FIGURE_EIGHT, TREFOIL: B1OneIdentity.TREFOIL, GIESEKING: B1OneIdentity.GIESEKING}
    for m, want in named.items():
        if identify_b1_one(m) is not want:
            return False, f"{m} -> {identify_b1_one(m).value}"
    classes = {(3, 1): FIG8, (1, 1): TREFOIL, (1, -1): GIESEKING}
    sweep = unimodular_sweep(-3, 3)
    counts = defaultdict(int)
    for m in sweep:
        got = identify_b1_one(m)
        counts[got] += 1
        target = classes.get((m.trace, m.det))
        expect = named[target] if target is not None and is_conjugate_z(m, target).conjugate else B1OneIdentity.NOT_B1_ONE
        if got is not expect:
            return False, f"{m} -> {got.value}, expected {expect.value}"
    return True, ", ".join(f"{k.value} {v}" for k, v in sorted(counts.items()))


CRITERIA = [
    (1, "census uniqueness", census_uniqueness, 1.0),
    (2, "homology formula", homology_formula, 30.0),
    (3, "hyperbolicity criterion", hyperbolicity_criterion, 30.0),
    (4, "D10 separation", d10_separation, 5.0),
    (5, "locally conjugate pair", local_pair, 60.0),
    (6, "oracle equivalence", oracle_equivalence, 120.0),
    (7, "SNF property suite", snf_suite, 10.0),
    (8, "identification", identification, 10.0),
]


def evaluate(func, limit):
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < limit
    return passed, elapsed, detail


def report_line(num, name, passed, elapsed, limit, detail):
    status = "PASS" if passed else "FAIL"
    return f"[{status}] criterion {num}: {name} ({elapsed:.2f}s, limit {limit:g}s) {detail}"


@pytest.mark.parametrize("num, name, func, limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, name, func, limit, capsys):
    passed, elapsed, detail = evaluate(func, limit)
    with capsys.disabled():
        print("\n" + report_line(num, name, passed, elapsed, limit, detail))
    assert passed, detail


if __name__ == "__main__":
    failures = 0
    for num, name, func, limit in CRITERIA:
        passed, elapsed, detail = evaluate(func, limit)
        failures += not passed
        print(report_line(num, name, passed, elapsed, limit, detail))
    sys.exit(1 if failures else 0)
