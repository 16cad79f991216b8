"""End-to-end acceptance checks; one PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
import random
import sys
import time

from sparsecurve import bounds, checks
from sparsecurve.implicit import enumerate_partitions, power_derivative
from sparsecurve.intersect import (CurveSystem, count_solutions, decompose, oracle_count,
                                   random_dense, random_system)
from sparsecurve.poly import DenseBiPoly, SparseBiPoly, bi_squarefree
from sparsecurve.roots import count_roots_in

RESULTS = {}

X, Y = DenseBiPoly.X(), DenseBiPoly.Y()


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    return ok


@lru_cache(maxsize=None)
def soundness_campaign():
    rng = random.Random(20240601)
    start = time.perf_counter()
    rows = []
    for _ in range(500):
        sys_ = random_system(rng, d_max=4, t_max=5, coeff=5, max_exp=4)
        rows.append(checks.verify_instance(sys_))
    return rows, time.perf_counter() - start


def test_criterion_1_bound_soundness():
    rows, elapsed = soundness_campaign()
    finite = [r for r in rows if r["status"] == "finite"]
    failures = [r for r in finite if not (r["agree_ok"] and r["bound_ok"])]
    failures += [r for r in rows if r["status"] != "finite" and not r["agree_ok"]]
    ds = {r["d"] for r in rows}
    ts = {r["t"] for r in rows}
    ok = not failures and elapsed < 600 and len(rows) == 500
    report(1, ok, f"{len(rows)} systems ({len(finite)} finite), d in {sorted(ds)}, "
                  f"t in {sorted(ts)}, {len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:3]


def test_criterion_2_derivative_check():
    rows = [checks.derivative_check(name, F, x0, y0, k)
            for name, F, x0, y0 in checks.DERIVATIVE_CURVES for k in range(1, 5)]
    bad = [r for r in rows if not (r["fd_ok"] and r["formal_ok"] and r["composed_ok"])]
    worst = max(r["rel_error"] for r in rows)
    ok = not bad and worst <= 1e-6
    report(2, ok, f"{len(rows)} (curve, k) pairs, max relative error {worst:.2e}, "
                  f"{len(bad)} failures")
    assert ok, bad


def test_criterion_3_factored_wronskian():
    rng = random.Random(303)
    rows = [checks.wronskian_check(rng, d_max=3, s_max=4) for _ in range(80)]
    bad = [r for r in rows if not (r["agree_ok"] and r["degree_ok"])]
    ok = not bad and len(rows) >= 50
    report(3, ok, f"{len(rows)} triples, s values {sorted({r['s'] for r in rows})}, "
                  f"{len(bad)} mismatches")
    assert ok, bad[:3]


def test_criterion_4_theorem1_soundness():
    rng = random.Random(404)
    rows = []
    while len(rows) < 120:
        r = checks.theorem1_check(rng, d_max=2, t_max=3)
        if r is not None:
            rows.append(r)
    bad = [r for r in rows if not r["bound_ok"]]
    ok = not bad
    report(4, ok, f"{len(rows)} (F, family, interval) cases, max measured "
                  f"{max(r['measured'] for r in rows)}, {len(bad)} violations")
    assert ok, bad[:3]


def test_criterion_5_structural_bounds():
    rows, _ = soundness_campaign()
    bad = [r for r in rows if not r["structural_ok"]]
    rng = random.Random(505)
    checked = 0
    for _ in range(200):
        F = bi_squarefree(random_dense(rng, rng.randint(1, 4), 5))
        if F.deg_y < 1:
            continue
        dec = decompose(F)
        d = F.degree
        vs = [iv.v for iv in dec.intervals]
        good = (len(dec.intervals) <= 2 * d * d - d + 1
                and all(iv.m <= d for iv in dec.intervals)
                and (None in vs or sum(vs) <= d)
                and dec.resultant.degree <= 2 * d * d - d
                and all(count_roots_in(F.subs_x(iv.sample)) == iv.m for iv in dec.intervals))
        checked += 1
        if not good:
            bad.append(str(F))
    ok = not bad
    report(5, ok, f"{len(rows)} pipeline reports + {checked} decompositions, {len(bad)} violations")
    assert ok, bad[:3]


def test_criterion_6_power_derivative():
    from sparsecurve.poly import UniPoly
    x = UniPoly.x()
    f = x**2 + 1
    mismatches = 0
    for alpha in (2, 3, 4):
        for p in range(1, 6):
            exp = power_derivative("a", p)
            direct = (f**alpha).derivative(p)
            derivs = [f] + [f.derivative(k) for k in range(1, p + 1)]
            for k in range(-10, 11):
                pt = Fraction(k, 3)
                if exp.evaluate(alpha, [d(pt) for d in derivs]) != direct(pt):
                    mismatches += 1

    def partitions(n, m):
        return 1 if n == 0 else sum(partitions(n - k, k) for k in range(1, min(n, m) + 1))

    counts = [len(enumerate_partitions(p)) for p in range(1, 11)]
    expected = [partitions(p, p) for p in range(1, 11)]
    ok = mismatches == 0 and counts == expected
    report(6, ok, f"expansion mismatches {mismatches}; |S_p| for p=1..10 = {counts}")
    assert ok


def test_criterion_7_known_values():
    def count(F, G):
        rep = count_solutions(CurveSystem(F, SparseBiPoly.from_dense(G)))
        return rep
    line = count(Y - X, X**2 + Y**2 - 2)
    circles = count(X**2 + Y**2 - 1, X**2 + Y**2 - 2)
    same = count(X**2 + Y**2 - 1, X**2 + Y**2 - 1)
    assembled = (Fraction(2 * 4 - 2 + 1) * 2 * 1 + 2 * 2 * 2 + 2 * 2 * 4
                 + sum(2 * (Fraction(4, 4) + 2 * 5 * comb(s, 2) * 2) for s in (1, 2))
                 + 2 * 8 - 4)
    checks_ = {
        "line/circle = 2": line.total == 2 and oracle_count(CurveSystem(Y - X, SparseBiPoly.from_dense(X**2 + Y**2 - 2))) == 2,
        "concentric = 0": circles.total == 0,
        "identical infinite, d(2d-1)": same.status == "infinite" and same.component_bound == 6,
        "irreducible(2,2) = 94": bounds.paper_bound_irreducible(2, 2) == 94 == assembled,
        "general(2,2) = 95": bounds.paper_bound_general(2, 2) == 95,
    }
    ok = all(checks_.values())
    report(7, ok, "; ".join(f"{k}: {'ok' if v else 'WRONG'}" for k, v in checks_.items()))
    assert ok


def test_criterion_8_polynomial_vs_exponential():
    worst = None
    ok = True
    for t in range(12, 31):
        l, n = bounds.khovanskii_parameters(2, t)
        g = bounds.paper_bound_general(2, t)
        k = bounds.khovanskii(l, n)
        ok &= g < k and g < bounds.khovanskii(t - 2, 2)
        ratio = g / k
        worst = ratio if worst is None else max(worst, ratio)
    report(8, ok, f"d=2, t=12..30: largest paper/khovanskii ratio {worst:.3e}")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
