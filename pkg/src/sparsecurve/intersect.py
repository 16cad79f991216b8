"""Counting real solutions of ``F = G = 0`` with ``F`` dense and ``G`` sparse.

The counting pipeline splits the real line at the roots of ``Res_Y(F, F_Y)``.
Over each open interval between them the real solutions of ``F(x, .) = 0``
form ``m_I`` disjoint analytic branches.  Solutions over the open intervals
are counted from the resultant with ``G``, using the first principal
subresultant to certify a simple common root.  Solutions over the critical
abscissae are counted directly by exact arithmetic over the algebraic number.

:func:`oracle_count` is an independent count: every real root of
``Res_Y(F, G)`` is a candidate, and the common real roots of the two fibers
are counted exactly over it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
import random

from . import dense
from .algebraic import (RealAlgebraic, fiber_common_real_roots, fiber_count,
                        fiber_gcd, fiber_isolate, fiber_of, _fiber_sign_at)
from .bounds import (component_bound, off_interval_bound, paper_bound_general,
                     paper_bound_irreducible, sparse_univariate_bound,
                     vertical_case_bound)
from .errors import (FYIdenticallyZero, NoDependence, OutsideInterval,
                     ResultantZero, ZeroF, ZeroInput)
from .poly import (DEFAULT_BUDGET, DenseBiPoly, SparseBiPoly, UniPoly, _yprem,
                   as_rational, bi_div, bi_gcd, bi_squarefree,
                   bivariate_common_factor, subresultant_coeff,
                   sylvester_resultant)
from .roots import IsolatingInterval, count_roots_in, isolate_roots, refine


@dataclass(frozen=True)
class CurveSystem:
    """``F = G = 0`` with ``F`` dense of degree at least one and ``G`` sparse."""

    F: DenseBiPoly
    G: SparseBiPoly

    def __post_init__(self):
        if self.F.is_zero():
            raise ZeroF("F is identically zero; two sparse equations are not supported")
        if self.F.degree < 1:
            raise ValueError("F must have degree at least 1")
        if not isinstance(self.G, SparseBiPoly):
            object.__setattr__(self, "G", SparseBiPoly.from_dense(self.G))

    @property
    def d(self):
        return self.F.degree

    @property
    def t(self):
        return self.G.t

    def dense_G(self, budget=DEFAULT_BUDGET):
        return self.G.to_dense(budget)


# ---------------------------------------------------------------------------
# helpers on real algebraic numbers


def _isolate_endpoint(a, poly):
    """Shrink ``a`` so that its closed interval meets no root of ``poly``
    other than (possibly) ``a`` itself."""
    if a.is_rational:
        return
    if a.is_zero(poly):
        sf = dense.squarefree(poly)
        while not a.is_rational and (
                count_roots_in(sf, a.lo, a.hi) - (dense.sign_at(sf, a.hi) == 0) > 1
                or dense.sign_at(sf, a.lo) == 0 or dense.sign_at(sf, a.hi) == 0):
            a.bisect()
    else:
        a.separate_from(dense.to_int(poly)[1])


def roots_between(poly, left, right):
    """Distinct real roots of ``poly`` strictly between two real algebraic
    numbers (``None`` stands for -inf / +inf)."""
    poly = dense.strip(list(poly))
    if not poly:
        raise ZeroInput("zero polynomial has no finite root count")
    if len(poly) == 1:
        return 0
    lo = hi = None
    if left is not None:
        _isolate_endpoint(left, poly)
        lo = left.hi
    if right is not None:
        _isolate_endpoint(right, poly)
        hi = right.lo
    if lo is not None and hi is not None and not lo < hi:
        return 0
    n = count_roots_in(poly, lo, hi)
    if hi is not None and dense.sign_at(poly, hi) == 0:
        n -= 1
    return n


def locate(x, crit):
    """Index of the open interval of ``crit`` holding ``x``, or ``None`` if
    ``x`` is one of the critical numbers."""
    lo, hi = 0, len(crit)
    while lo < hi:
        mid = (lo + hi) // 2
        c = x.compare(crit[mid])
        if c == 0:
            return None
        if c < 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class IntervalInfo:
    index: int
    lo: object        # IsolatingInterval of the left critical number, or None
    hi: object
    sample: Fraction
    m: int
    v: object         # roots of F(X, 0) inside, None when F(X, 0) == 0


@dataclass
class Decomposition:
    F: DenseBiPoly
    resultant: UniPoly
    critical: list              # IsolatingInterval per critical abscissa
    intervals: list             # IntervalInfo
    numbers: list = field(repr=False, default_factory=list)  # RealAlgebraic

    @property
    def size(self):
        return len(self.intervals)

    def sample_points(self, index, n):
        """``n`` distinct rational points inside interval ``index``."""
        left = self.numbers[index - 1] if index > 0 else None
        right = self.numbers[index] if index < len(self.numbers) else None
        a = left.hi if left is not None else None
        b = right.lo if right is not None else None
        if a is None and b is None:
            a, b = Fraction(-n), Fraction(n)
        elif a is None:
            a = b - n
        elif b is None:
            b = a + n
        return [a + (b - a) * Fraction(k, n + 1) for k in range(1, n + 1)]

    def contains(self, index, x):
        x = as_rational(x)
        left = self.numbers[index - 1] if index > 0 else None
        right = self.numbers[index] if index < len(self.numbers) else None
        if left is not None and left.compare(x) >= 0:
            return False
        if right is not None and right.compare(x) <= 0:
            return False
        return True


def decompose(F):
    """Split the real line at the real roots of ``Res_Y(F, F_Y)``."""
    if F.is_zero():
        raise ZeroInput("cannot decompose the zero polynomial")
    FY = F.partial(0, 1)
    if FY.is_zero():
        raise FYIdenticallyZero("F does not depend on Y")
    R = sylvester_resultant(F, FY, "y")
    if R.is_zero():
        raise ResultantZero("Res(F, F_Y) vanishes identically; deflate F first")
    numbers = RealAlgebraic.roots_of(R.coeffs) if R.degree > 0 else []
    critical = [a.interval() for a in numbers]
    axis = F.subs_y(0)
    intervals = []
    for i in range(len(numbers) + 1):
        left = numbers[i - 1] if i > 0 else None
        right = numbers[i] if i < len(numbers) else None
        if left is None and right is None:
            sample = Fraction(0)
        elif left is None:
            sample = -(1 + abs(right.lo))
        elif right is None:
            sample = 1 + abs(left.hi)
        else:
            sample = (left.hi + right.lo) / 2
        m = count_roots_in(F.subs_x(sample))
        v = roots_between(axis.coeffs, left, right) if not axis.is_zero() else None
        intervals.append(IntervalInfo(i, critical[i - 1] if left else None,
                                      critical[i] if right else None, sample, m, v))
    return Decomposition(F, R, critical, intervals, numbers)


@dataclass(frozen=True)
class Branch:
    interval: int
    index: int            # 1-based, ordered by y
    x: Fraction
    y: IsolatingInterval


def branches(decomp):
    out = []
    for iv in decomp.intervals:
        roots = isolate_roots(decomp.F.subs_x(iv.sample))
        for i, r in enumerate(roots, start=1):
            out.append(Branch(iv.index, i, iv.sample, r))
    return out


def trace_branch(decomp, branch, x, precision):
    """Isolating interval of width at most ``precision`` for ``phi(x)``."""
    x = as_rational(x)
    if not decomp.contains(branch.interval, x):
        raise OutsideInterval(f"{x} is not inside interval {branch.interval}")
    fiber = decomp.F.subs_x(x)
    roots = isolate_roots(fiber)
    if not 1 <= branch.index <= len(roots):
        raise OutsideInterval("branch index exceeds the fiber's real roots")
    return refine(roots[branch.index - 1], fiber, precision)


def branch_zeros(decomp, interval_index, branch_index, P):
    """Distinct ``x`` in the interval with ``P(x, phi(x)) = 0`` on one branch.

    Returns ``None`` when ``P`` vanishes identically along the branch.
    """
    F = decomp.F
    iv = decomp.intervals[interval_index]
    nums = decomp.numbers
    left = nums[interval_index - 1] if interval_index > 0 else None
    right = nums[interval_index] if interval_index < len(nums) else None
    if P.is_zero():
        return None
    if P.deg_y <= 0:
        return roots_between(P.subs_y(0).coeffs, left, right)
    h = bi_gcd(F, P)
    K = F
    if h.degree > 0:
        # does the branch lie on the common factor?
        fib = F.subs_x(iv.sample)
        root = isolate_roots(fib)[branch_index - 1]
        g = dense.zgcd(dense.to_int(list(fib.coeffs))[1],
                       dense.to_int(list(h.subs_x(iv.sample).coeffs))[1])
        if len(g) > 1:
            if root.is_exact:
                if dense.sign_at(g, root.lo) == 0:
                    return None
            elif count_roots_in(g, root.lo, root.hi) > 0:
                return None
        K = bi_div(F, h)
    R = sylvester_resultant(K, P, "y")
    if R.is_zero():
        raise AssertionError("coprime polynomials with vanishing resultant")
    if R.degree <= 0:
        return 0
    count = 0
    for x0 in RealAlgebraic.roots_of(R.coeffs):
        if locate(x0, nums) != interval_index:
            continue
        fib = fiber_of(F, x0)
        yints = fiber_isolate(fib, x0)
        lo, hi = yints[branch_index - 1]
        pf = fiber_of(P, x0)
        if lo == hi:
            if _fiber_sign_at(pf, lo, x0) == 0:
                count += 1
            continue
        g = fiber_gcd(fib, pf, x0)
        if len(g) > 1 and fiber_count(g, x0, lo, hi) > 0:
            count += 1
    return count


# ---------------------------------------------------------------------------
# sparsity reduction


def _rref_kernel(rows, ncols):
    """A nonzero kernel vector of a rational matrix, or ``None``."""
    M = [[Fraction(v) for v in r] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -M[i][f]
    L = 1
    for v in vec:
        L = L * v.denominator // gcd(L, v.denominator)
    ints = [int(v * L) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return ints


def support_dependence(F, support, budget=DEFAULT_BUDGET):
    """Coefficients ``c`` (not all zero) making ``sum c_j X^a_j Y^b_j`` a
    multiple of ``F``, or ``None`` if the monomials are independent mod F."""
    if F.is_zero():
        raise ZeroInput("F must be nonzero")
    support = [(int(a), int(b)) for a, b in support]
    if not support:
        return None
    for a, b in support:
        if max(a, b) > budget:
            from .errors import ExponentBudgetExceeded
            raise ExponentBudgetExceeded(f"exponent {max(a, b)} exceeds budget {budget}")
    L, Fi = F.to_int()
    cols = Fi.y_coeffs()
    from .poly import _ycontent, _ydiv_content
    content = _ycontent(cols)
    prim = _ydiv_content(cols, content)
    m = len(prim) - 1
    equations = {}

    def add(key, j, v):
        equations.setdefault(key, {})
        equations[key][j] = equations[key].get(j, 0) + v

    if m >= 1:
        lc = prim[-1]
        bmax = max(b for _, b in support)
        E = max(0, bmax - m + 1)
        for j, (a, b) in enumerate(support):
            mono = [[] for _ in range(b)] + [[0] * a + [1]]
            if b >= m:
                red = _yprem(mono, prim)
                extra = E - (b - m + 1)
            else:
                red = mono
                extra = E
            if extra:
                red = [dense.mul(c, dense.power(lc, extra)) for c in red]
            for yb, col in enumerate(red):
                for xa, v in enumerate(col):
                    if v:
                        add(("p", xa, yb), j, v)
    if len(content) > 1:
        for j, (a, b) in enumerate(support):
            red = dense.rem_q([0] * a + [1], content)
            for xa, v in enumerate(red):
                if v:
                    add(("c", xa, b), j, v)
    n = len(support)
    rows = [[eq.get(j, 0) for j in range(n)] for _, eq in sorted(equations.items())]
    if not rows:
        return [1] + [0] * (n - 1) if n else None
    return _rref_kernel(rows, n)


def reduce_sparsity(sys, budget=DEFAULT_BUDGET):
    """Subtract a multiple of a dependence ``H`` from ``G``, dropping at
    least one term while keeping the real solution set."""
    support = sys.G.support
    c = support_dependence(sys.F, support, budget)
    if c is None:
        raise NoDependence("the support of G is independent modulo F")
    coeffs = sys.G.coeffs
    u = max(j for j, v in enumerate(c) if v)
    lam = Fraction(coeffs[u]) / c[u]
    H = [(v * lam, a, b) for v, (a, b) in zip(c, support) if v]
    Gt = SparseBiPoly(list(sys.G.terms) + [(-v, a, b) for v, a, b in H])
    return CurveSystem(sys.F, Gt)


# ---------------------------------------------------------------------------
# exact common real points of a coprime pair (with optional extra equations)


def _common_real_points(A, B, extras=()):
    """Distinct real points where ``A``, ``B`` and every extra vanish.

    ``A`` and ``B`` must be coprime so the set is finite.
    """
    if A.deg_y <= 0 and B.deg_y <= 0:
        return 0
    if A.deg_y <= 0 or B.deg_y <= 0:
        U, V = (A, B) if A.deg_y <= 0 else (B, A)
        total = 0
        for x0 in RealAlgebraic.roots_of(U.subs_y(0).coeffs):
            n = fiber_common_real_roots([V] + list(extras), x0)
            total += n or 0
        return total
    R = sylvester_resultant(A, B, "y")
    if R.is_zero():
        raise ValueError("polynomials share a common factor")
    if R.degree <= 0:
        return 0
    total = 0
    for x0 in RealAlgebraic.roots_of(R.coeffs):
        n = fiber_common_real_roots([A, B] + list(extras), x0)
        if n is None:
            raise ValueError("polynomials share a vertical line")
        total += n
    return total


def _has_real_curve(h):
    """True when the real zero set of ``h`` is infinite."""
    h = bi_squarefree(h)
    if h.degree <= 0:
        return False
    from .poly import bi_content
    c = list(bi_content(h).coeffs)
    if len(c) > 1 and isolate_roots(c):
        return True
    if h.deg_y <= 0:
        return False
    p = bi_div(h, DenseBiPoly.from_y_coeffs([c])) if len(c) > 1 else h
    return any(iv.m > 0 for iv in decompose(bi_squarefree(p)).intervals)


def _isolated_real_points(h):
    """Real points of a squarefree ``h`` whose real zero set is finite."""
    hx, hy = h.partial(1, 0), h.partial(0, 1)
    for c in range(1, 64):
        B = hx + c * hy
        if not B.is_zero() and not bivariate_common_factor(h, B):
            return _common_real_points(h, B, [hx, hy])
    raise ArithmeticError("no coprime directional derivative found")


# ---------------------------------------------------------------------------
# oracle


def oracle_count(sys, budget=DEFAULT_BUDGET):
    """Independent count of real solutions: an int, or ``"infinite"``."""
    F = bi_squarefree(sys.F)
    if sys.G.is_zero():
        return "infinite" if _has_real_curve(F) else _isolated_real_points(F)
    G = sys.dense_G(budget)
    h = bi_gcd(F, G)
    if h.degree <= 0:
        return _common_real_points(F, G)
    if _has_real_curve(h):
        return "infinite"
    Fp = bi_div(F, h)
    total = _isolated_real_points(h)
    if Fp.degree > 0:
        total += _common_real_points(Fp, G) - _common_real_points(Fp, G, [h])
    return total


# ---------------------------------------------------------------------------
# pipeline


@dataclass
class CountReport:
    status: str                       # "finite" or "infinite"
    total: object = None
    component_bound: object = None
    s: int = 0
    s_prime: int = 0
    per_interval: list = field(default_factory=list)
    r_s: list = field(default_factory=list)
    bound_name: str = ""
    bound: int = 0
    bound_ok: bool = True
    d: int = 0
    t: int = 0
    t_reduced: int = 0
    case: str = ""
    intervals: int = 0
    critical: int = 0
    resultant_degree: int = -1
    notes: list = field(default_factory=list)

    @property
    def is_finite(self):
        return self.status == "finite"


def certify_irreducible(F):
    """Cheap sufficient test for irreducibility over Q (``False`` = unknown)."""
    if F.degree == 1:
        return True
    for P in (F, F.swap()):
        cols = P.y_coeffs()
        if len(cols) == 2 and cols[1]:
            a = dense.to_int(cols[1])[1]
            b = dense.to_int(cols[0])[1] if cols[0] else []
            if not b:
                continue
            if len(dense.zgcd(a, b)) == 1:
                return True
    return False


def _infinite_report(sys, h, report):
    report.status = "infinite"
    d = sys.d
    G = sys.G
    if G.is_zero() or bi_div_ok(G.to_dense(), sys.F):
        report.component_bound = component_bound(d)
    else:
        report.component_bound = component_bound(d) + paper_bound_general(d, max(1, sys.t))
        report.notes.append("common factor is proper: bound adds the isolated solutions")
    report.case = "common-factor"
    report.bound_name = "component_bound"
    report.bound = report.component_bound
    return report


def bi_div_ok(A, B):
    try:
        bi_div(A, B)
        return True
    except ArithmeticError:
        return False


def count_solutions(sys, budget=DEFAULT_BUDGET, wronskian=False):
    """Count the real solutions of ``sys`` through the branch decomposition."""
    d, t = sys.d, sys.t
    report = CountReport("finite", d=d, t=t, t_reduced=t)
    F = bi_squarefree(sys.F)
    if sys.G.is_zero():
        if _has_real_curve(F):
            return _infinite_report(sys, F, report)
        report.total = _isolated_real_points(F)
        report.case = "G-zero"
        return _finish(report, d, max(t, 1), sys)
    G = sys.dense_G(budget)
    h = bi_gcd(F, G)
    if h.degree > 0:
        if _has_real_curve(h):
            return _infinite_report(sys, h, report)
        Fp = bi_div(F, h)
        total = _isolated_real_points(h)
        report.notes.append("common factor with finitely many real points")
        if Fp.degree > 0:
            sub = count_solutions(CurveSystem(Fp, sys.G), budget)
            total += sub.total - _common_real_points(Fp, G, [h])
            report.s, report.s_prime = sub.s, sub.s_prime
            report.per_interval = sub.per_interval
        report.total = total
        report.case = "common-factor"
        return _finish(report, d, t, sys)

    # drop terms while the support is dependent modulo F
    while sys.G.t > 1:
        try:
            sys = reduce_sparsity(sys, budget)
        except NoDependence:
            break
        report.notes.append(f"sparsity reduced to t={sys.G.t}")
    report.t_reduced = sys.G.t
    G = sys.dense_G(budget)

    if F.deg_y <= 0:
        report.case = "vertical"
        total = 0
        for x0 in RealAlgebraic.roots_of(F.subs_y(0).coeffs):
            total += fiber_common_real_roots([G], x0)
        report.total = report.s_prime = total
        return _finish(report, d, t, sys)
    if F.degree == 1 and F.deg_x == 0 and F.coefficient(0, 0) == 0:
        report.case = "axis"
        report.total = report.s_prime = count_roots_in(G.subs_y(0))
        return _finish(report, d, t, sys)

    report.case = "general"
    dec = decompose(F)
    report.intervals = dec.size
    report.critical = len(dec.critical)
    report.resultant_degree = dec.resultant.degree
    crit = dec.numbers
    s_prime = 0
    for x0 in crit:
        n = fiber_common_real_roots([F, G], x0)
        if n is None:
            raise AssertionError("vertical line shared by F and G")
        s_prime += n
    per, s = _count_on_intervals(F, G, dec)
    report.s, report.s_prime = s, s_prime
    report.total = s + s_prime
    report.per_interval = per
    if wronskian:
        report.r_s = wronskian_tallies(dec, sys.G)
    return _finish(report, d, t, sys)


def _count_on_intervals(F, G, dec):
    crit = dec.numbers
    nI = dec.size
    s_I = [0] * nI
    from .poly import _ycontent, _ydiv_content
    cols = F.to_int()[1].y_coeffs()
    c = _ycontent(cols)
    p = _ydiv_content(cols, c)
    p = [list(col) for col in p]
    g = G.to_int()[1].y_coeffs()
    m = len(p) - 1
    B = _yprem(g, p)
    if not B:
        raise AssertionError("G reduced to zero modulo a coprime F")
    critpoly = dense.squarefree(list(dec.resultant.coeffs)) if dec.resultant.degree > 0 else [1]
    if len(B) == 1:
        # the fiber of G is a function of x alone: whole fibers are common
        b = B[0]
        for x0 in RealAlgebraic.roots_of(b) if len(b) > 1 else []:
            i = locate(x0, crit)
            if i is not None:
                s_I[i] += dec.intervals[i].m
    else:
        from .poly import res_y_lists
        R = res_y_lists(p, B)
        if not R:
            raise AssertionError("vanishing resultant for a coprime pair")
        if len(R) > 1:
            Rsf = dense.squarefree(R)
            shared = dense.zgcd(Rsf, critpoly)
            R_omega = dense.primitive(dense.exact_div(Rsf, shared)) if len(shared) > 1 else Rsf
            if m == 1:
                R2 = [1]
            else:
                psc1 = subresultant_coeff(p, B, 1, 1)
                R2 = dense.zgcd(R_omega, psc1) if psc1 else R_omega
            R1 = dense.primitive(dense.exact_div(R_omega, R2)) if len(R2) > 1 else R_omega
            if len(R1) > 1:
                for i in range(nI):
                    left = crit[i - 1] if i > 0 else None
                    right = crit[i] if i < len(crit) else None
                    s_I[i] += roots_between(R1, left, right)
            if len(R2) > 1:
                Fd = DenseBiPoly.from_y_coeffs(p)
                for x0 in RealAlgebraic.roots_of(R2):
                    i = locate(x0, crit)
                    if i is None:
                        continue
                    s_I[i] += fiber_common_real_roots([Fd, G], x0)
    per = []
    for iv, n in zip(dec.intervals, s_I):
        per.append({"interval": iv.index, "m": iv.m, "v": iv.v, "s": n})
    return per, sum(s_I)


def wronskian_tallies(dec, G):
    """Zero counts of ``T_s`` along every branch (the ``r^s`` tallies)."""
    from .wronskian import BasisFamily, build_Ts
    fam = BasisFamily(G.support)
    out = []
    for s in range(1, fam.t + 1):
        T = build_Ts(dec.F, fam, s).T
        total = 0
        for iv in dec.intervals:
            for b in range(1, iv.m + 1):
                z = branch_zeros(dec, iv.index, b, T)
                total += z if z is not None else 0
        out.append(total)
    return out


def _finish(report, d, t, sys):
    t = max(t, 1)
    if report.case == "axis":
        report.bound_name = "sparse_univariate"
        report.bound = sparse_univariate_bound(t)
    elif report.case == "vertical":
        report.bound_name = "vertical_case"
        report.bound = vertical_case_bound(d, t)
    elif certify_irreducible(sys.F):
        report.bound_name = "paper_irreducible"
        report.bound = paper_bound_irreducible(d, t)
    else:
        report.bound_name = "paper_general"
        report.bound = paper_bound_general(d, t)
    report.bound_ok = report.total <= report.bound and report.total <= paper_bound_general(d, t)
    if report.case == "general":
        report.bound_ok = report.bound_ok and report.s_prime <= off_interval_bound(d)
    return report


# ---------------------------------------------------------------------------
# random instances


def random_dense(rng, d, coeff):
    while True:
        terms = [(rng.randint(-coeff, coeff), i, j)
                 for i in range(d + 1) for j in range(d + 1 - i)]
        P = DenseBiPoly.from_terms(terms)
        if P.degree >= 1:
            return P


def random_sparse(rng, t, coeff, max_exp=4):
    pairs = rng.sample([(a, b) for a in range(max_exp + 1) for b in range(max_exp + 1)], t)
    terms = []
    for a, b in pairs:
        c = 0
        while c == 0:
            c = rng.randint(-coeff, coeff)
        terms.append((c, a, b))
    return SparseBiPoly(terms)


def random_system(rng, d_max=4, t_max=5, coeff=5, max_exp=4):
    """Seeded random instance: dense ``F`` of degree ``<= d_max``, ``G`` with
    ``1..t_max`` terms and exponents ``<= max_exp``."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    d = rng.randint(1, d_max)
    t = rng.randint(1, t_max)
    return CurveSystem(random_dense(rng, d, coeff), random_sparse(rng, t, coeff, max_exp))
