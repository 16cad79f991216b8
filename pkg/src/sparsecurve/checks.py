"""Self-checks shared by the CLI campaigns and the test-suite.

Each check returns a plain dict (one report row) with boolean ``*_ok``
fields; nothing here raises on a failed comparison.
"""

from fractions import Fraction
from math import comb
import random

from . import bounds
from .implicit import implicit_numerator, eval_phi_derivative
from .intersect import (branches, branch_zeros, count_solutions,
                        decompose, oracle_count, random_dense, random_system,
                        trace_branch)
from .poly import DenseBiPoly, bi_squarefree, format_bipoly
from .roots import isolate_roots
from .wronskian import (BasisFamily, build_Ts, direct_wronskian,
                        theorem1_bound, wronskian_zero_counts)

X, Y = DenseBiPoly.X(), DenseBiPoly.Y()

# curves with a rational regular point on them
DERIVATIVE_CURVES = [
    ("Y-X^2", Y - X**2, Fraction(1, 2), Fraction(1, 4)),
    ("X^2+Y^2-1", X**2 + Y**2 - 1, Fraction(3, 5), Fraction(4, 5)),
    ("XY-1", X * Y - 1, Fraction(2), Fraction(1, 2)),
    ("Y^3-3Y-X", Y**3 - 3 * Y - X, Fraction(-11, 8), Fraction(1, 2)),
]


def _branch_through(dec, x0, y0):
    for b in branches(dec):
        if dec.contains(b.interval, x0):
            roots = isolate_roots(dec.F.subs_x(x0))
            for i, r in enumerate(roots, start=1):
                if (r.is_exact and r.lo == y0) or (not r.is_exact and r.lo < y0 < r.hi):
                    return type(b)(b.interval, i, b.x, b.y)
    raise ValueError("point is not on a regular branch")


def _central_difference(values, k, h):
    """Order-``k`` central difference from ``values[j] = f(x + (k/2 - j) h)``."""
    total = sum((-1) ** j * comb(k, j) * values[j] for j in range(k + 1))
    return total / h ** k


def derivative_check(name, F, x0, y0, k, tol=Fraction(1, 10**6), h=Fraction(1, 10**4)):
    """Compare ``phi^(k)`` from the implicit numerator with finite differences
    of the traced branch, plus the two degree certificates."""
    exact = Fraction(eval_phi_derivative(F, k, x0, y0))
    dec = decompose(bi_squarefree(F))
    br = _branch_through(dec, x0, y0)
    prec = h ** (k + 4)
    vals = []
    for j in range(k + 1):
        xj = x0 + (Fraction(k, 2) - j) * h
        iv = trace_branch(dec, br, xj, prec)
        vals.append(iv.midpoint)
    fd = _central_difference(vals, k, h)
    err = abs(fd - exact)
    scale = max(abs(exact), Fraction(1))
    cert = implicit_numerator(F, k).certificates
    return {
        "curve": name, "k": k, "x": x0, "y": y0,
        "exact": exact, "finite_difference": float(fd),
        "rel_error": float(err / scale),
        "fd_ok": err <= tol * scale,
        "formal_degree": cert["formal_degree"], "formal_ok": cert["formal_ok"],
        "composed_degree": cert["composed_degree"], "composed_ok": cert["composed_ok"],
    }


def random_curve_point(rng, d_max=3, coeff=5, span=3):
    """Random ``F`` with a rational regular point, made by shifting the
    constant term so the point lies on the curve.  Both coordinates are
    nonzero so negative monomial exponents stay defined."""
    nonzero = [k for k in range(-span * 4, span * 4 + 1) if k]
    while True:
        d = rng.randint(1, d_max)
        F = random_dense(rng, d, coeff)
        x0 = Fraction(rng.choice(nonzero), rng.randint(1, 4))
        y0 = Fraction(rng.choice(nonzero), rng.randint(1, 4))
        F = F - F.eval(x0, y0)
        if F.degree >= 1 and F.partial(0, 1).eval(x0, y0) != 0:
            return F, x0, y0


def random_family(rng, s, max_exp=3):
    pairs = rng.sample([(a, b) for a in range(max_exp + 1) for b in range(max_exp + 1)], s)
    return BasisFamily(pairs)


def wronskian_check(rng, d_max=3, s_max=4):
    F, x0, y0 = random_curve_point(rng, d_max)
    s = rng.randint(1, s_max)
    fam = random_family(rng, s)
    fw = build_Ts(F, fam, s)
    direct = direct_wronskian(F, fam, s, x0, y0)
    fact = fw.evaluate(F, x0, y0)
    return {
        "F": format_bipoly(F), "family": list(fam.pairs), "s": s, "x": x0, "y": y0,
        "direct": direct, "factored": fact,
        "agree_ok": fact is not None and fact == direct,
        "deg_x": fw.T.deg_x, "deg_y": fw.T.deg_y, "degree_bound": fw.degree_bound,
        "degree_ok": fw.degree_ok,
    }


def theorem1_check(rng, d_max=2, t_max=3, coeff=5, max_exp=2, tries=50):
    """Measured zeros of a sparse combination along one branch against the
    Wronskian bound.  Returns ``None`` when no usable case was drawn."""
    for _ in range(tries):
        d = rng.randint(1, d_max)
        F = bi_squarefree(random_dense(rng, d, coeff))
        if F.deg_y < 1:
            continue
        try:
            dec = decompose(F)
        except Exception:
            continue
        live = [iv for iv in dec.intervals if iv.m > 0]
        if not live:
            continue
        iv = rng.choice(live)
        b = rng.randint(1, iv.m)
        t = rng.randint(1, t_max)
        fam = random_family(rng, t, max_exp)
        coeffs = []
        for _ in range(t):
            c = 0
            while c == 0:
                c = rng.randint(-coeff, coeff)
            coeffs.append(c)
        comb_poly = DenseBiPoly.from_terms([(c, a, bb) for c, (a, bb) in zip(coeffs, fam.pairs)])
        measured = branch_zeros(dec, iv.index, b, comb_poly)
        if measured is None:
            continue
        Z = wronskian_zero_counts(F, fam, dec, iv.index, b)
        if Z is None:
            continue
        bound = theorem1_bound(t, Z)
        return {
            "F": format_bipoly(F), "family": list(fam.pairs), "coeffs": coeffs,
            "interval": iv.index, "branch": b, "measured": measured,
            "Z": list(Z.Z), "bound": bound, "bound_ok": measured <= bound,
        }
    return None


def verify_instance(sys, budget=64):
    """Pipeline against oracle plus every structural bound, as one row."""
    rep = count_solutions(sys, budget)
    orc = oracle_count(sys, budget)
    d, t = sys.d, max(sys.t, 1)
    total = rep.total if rep.is_finite else "infinite"
    row = {
        "F": format_bipoly(sys.F), "G": format_bipoly(sys.G.to_dense(budget)),
        "d": d, "t": sys.t, "status": rep.status, "count": total, "oracle": orc,
        "s": rep.s, "s_prime": rep.s_prime, "case": rep.case,
        "bound": bounds.paper_bound_general(d, t),
        "agree_ok": total == orc,
        "bound_ok": (not rep.is_finite) or rep.total <= bounds.paper_bound_general(d, t),
    }
    structural = True
    if rep.case == "general":
        structural = (rep.intervals <= bounds.interval_count_bound(d)
                      and rep.resultant_degree <= bounds.resultant_degree_bound(d)
                      and rep.s_prime <= bounds.off_interval_bound(d)
                      and all(p["m"] <= d for p in rep.per_interval)
                      and sum(p["v"] or 0 for p in rep.per_interval) <= d)
    row["structural_ok"] = structural
    return row


def random_instances(seed, n, d_max=4, t_max=5, coeff=5, max_exp=4):
    rng = random.Random(seed)
    return [random_system(rng, d_max, t_max, coeff, max_exp) for _ in range(n)]
