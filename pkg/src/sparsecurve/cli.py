"""Command-line front end: counting, bound tables and self-check campaigns.

Reports are CSV (columns fixed per mode, schema version in a leading
comment line) or JSON with the same columns.  Output depends only on the
flags, so rerunning with the same seed gives a byte-identical file.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
from fractions import Fraction
import io
import json
import random
import sys

from . import bounds, checks
from .errors import ExponentBudgetExceeded, ParseError, SparseCurveError, ZeroF
from .intersect import CurveSystem, count_solutions
from .poly import DEFAULT_BUDGET, format_terms, parse_sparse

SCHEMA_VERSION = 1

INSTANCE = ["F_terms", "G_terms"]

COLUMNS = {
    "count": ["instance", *INSTANCE, "d", "t", "t_reduced", "case", "status", "count",
              "s", "s_prime", "component_bound", "case_bound_name", "case_bound",
              "bound", "bound_ok"],
    "verify": ["instance", *INSTANCE, "d", "t", "case", "status", "count", "oracle",
               "s", "s_prime", "bound", "agree_ok", "bound_ok", "structural_ok"],
    "bounds": ["d", "t", "khovanskii_l", "khovanskii", "bihan_sottile", "lrw_trinomial",
               "lrw_general", "avendano", "optm", "bezout", "real_bezout",
               "paper_irreducible", "paper_general", "asymptotic", "below_khovanskii",
               "consistent_ok"],
    "derivcheck": ["curve", "k", "x", "y", "exact", "finite_difference", "rel_error",
                   "formal_degree", "composed_degree", "fd_ok", "formal_ok", "composed_ok"],
    "wronskcheck": ["instance", "F", "family", "s", "x", "y", "direct", "factored",
                    "deg_x", "deg_y", "degree_bound", "agree_ok", "degree_ok"],
}


def _terms_text(P):
    return "; ".join(format_terms(P).strip().splitlines())


def parse_system(f_path, g_path):
    """Read ``F`` and ``G`` from term files into a :class:`CurveSystem`."""
    with open(f_path) as fh:
        F = parse_sparse(fh.read())
    with open(g_path) as fh:
        G = parse_sparse(fh.read())
    if F.is_zero():
        raise ZeroF("F is identically zero: systems of two sparse equations "
                    "are outside what this tool can count")
    try:
        Fd = F.to_dense(DEFAULT_BUDGET)
    except ExponentBudgetExceeded:
        raise ExponentBudgetExceeded(
            f"F must be dense of moderate degree (at most {DEFAULT_BUDGET})") from None
    return CurveSystem(Fd, G)


def _count_row(sys_, budget=DEFAULT_BUDGET):
    rep = count_solutions(sys_, budget)
    d, t = sys_.d, max(sys_.t, 1)
    general = bounds.paper_bound_general(d, t)
    return {
        "F_terms": _terms_text(sys_.F), "G_terms": _terms_text(sys_.G),
        "d": sys_.d, "t": sys_.t, "t_reduced": rep.t_reduced, "case": rep.case,
        "status": rep.status, "count": rep.total if rep.is_finite else "infinite",
        "s": rep.s, "s_prime": rep.s_prime, "component_bound": rep.component_bound,
        "case_bound_name": rep.bound_name, "case_bound": rep.bound, "bound": general,
        "bound_ok": rep.bound_ok and (not rep.is_finite or rep.total <= general),
    }


def _verify_row(sys_):
    row = checks.verify_instance(sys_)
    row["F_terms"], row["G_terms"] = _terms_text(sys_.F), _terms_text(sys_.G)
    return row


def _bounds_rows(d_max, t_max):
    rows = []
    for d in range(1, d_max + 1):
        for t in range(1, t_max + 1):
            tab = bounds.bound_table(d, t).as_dict()
            tab["khovanskii_l"] = bounds.khovanskii_parameters(d, t)[0]
            tab["asymptotic"] = bounds.asymptotic_form(d, t)
            tab["below_khovanskii"] = tab["paper_general"] < tab["khovanskii"]
            tab["consistent_ok"] = (
                tab["paper_general"] >= tab["paper_irreducible"]
                and tab["optm"] == bounds.component_bound(d)
                and tab["bezout"] == d * d)
            rows.append(tab)
    return rows


def _derivcheck_rows(tol, k_max=4):
    rows = []
    for name, F, x0, y0 in checks.DERIVATIVE_CURVES:
        for k in range(1, k_max + 1):
            rows.append(checks.derivative_check(name, F, x0, y0, k, tol))
    return rows


def _wronskcheck_rows(seed, n, d_max):
    rng = random.Random(seed)
    return [checks.wronskian_check(rng, min(d_max, 3)) for _ in range(n)]


def _map(fn, items, workers):
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return json.dumps(_jsonable(v), separators=(",", ":"))
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def passed(row):
    return all(v for k, v in row.items() if k.endswith("_ok"))


def render(mode, rows, fmt, header=""):
    cols = COLUMNS[mode]
    if fmt == "json":
        doc = {"schema": "sparsecurve-report", "version": SCHEMA_VERSION, "mode": mode,
               "header": header, "columns": cols,
               "rows": [{c: _jsonable(r.get(c)) for c in cols} for r in rows]}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(f"# sparsecurve-report v{SCHEMA_VERSION} mode={mode} {header}".rstrip() + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def build_parser():
    p = argparse.ArgumentParser(prog="sparsecurve",
                                description="Count real solutions of a dense curve "
                                            "against a sparse curve, and check the bounds.")
    p.add_argument("--mode", choices=sorted(COLUMNS), default="count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--tmax", type=int, default=5)
    p.add_argument("--coeff", type=int, default=5)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--tol", type=Fraction, default=Fraction(1, 10**6))
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--f", dest="f_path")
    p.add_argument("--g", dest="g_path")
    p.add_argument("--workers", type=int, default=1)
    return p


def run(args):
    """Produce ``(report_text, exit_status)`` for parsed arguments."""
    if args.dmax < 1 or args.n < 1 or args.tol <= 0 or args.tmax < 1 or args.coeff < 1:
        raise ValueError("need dmax, tmax, coeff, n >= 1 and tol > 0")
    mode = args.mode
    header = f"seed={args.seed} dmax={args.dmax} tmax={args.tmax} coeff={args.coeff} n={args.n}"
    if mode in ("count", "verify"):
        if args.f_path or args.g_path:
            if not (args.f_path and args.g_path):
                raise ValueError("--f and --g must be given together")
            systems = [parse_system(args.f_path, args.g_path)]
            header = "files"
        else:
            systems = checks.random_instances(args.seed, args.n, args.dmax, args.tmax,
                                              args.coeff)
        rows = _map(_count_row if mode == "count" else _verify_row, systems, args.workers)
        for i, r in enumerate(rows):
            r["instance"] = i
    elif mode == "bounds":
        rows = _bounds_rows(args.dmax, args.tmax)
        header = f"dmax={args.dmax} tmax={args.tmax}"
    elif mode == "derivcheck":
        rows = _derivcheck_rows(args.tol)
        header = f"tol={args.tol}"
    else:
        rows = _wronskcheck_rows(args.seed, args.n, args.dmax)
        for i, r in enumerate(rows):
            r["instance"] = i
    ok = all(passed(r) for r in rows)
    return render(mode, rows, args.format, header), 0 if ok else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text, status = run(args)
    except (ParseError, ZeroF, ExponentBudgetExceeded) as e:
        print(f"sparsecurve: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"sparsecurve: {e}", file=sys.stderr)
        return 3
    except (SparseCurveError, ValueError) as e:
        print(f"sparsecurve: {e}", file=sys.stderr)
        return 2
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
