"""Real algebraic numbers and polynomial fibers over them.

A :class:`RealAlgebraic` is a squarefree integer polynomial together with a
rational isolating interval.  Arithmetic in Q(x0) is done on polynomial
representatives reduced modulo the defining polynomial.  Whenever a zero test
finds a nontrivial gcd with the modulus, the modulus is split and the factor
that actually vanishes at x0 is kept (dynamic evaluation), so no
factorisation is ever needed.

A "fiber" is a polynomial in Y whose coefficients live in Q(x0); it is a
plain list of element representatives (rational coefficient lists in x).
"""

from fractions import Fraction
from math import gcd

from . import dense
from .roots import IsolatingInterval, count_roots_in, isolate_roots


class RealAlgebraic:
    """The unique root of ``poly`` inside an isolating interval.

    Refinement and modulus splitting update the instance in place; they only
    ever narrow the description of the same number.
    """

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, poly, interval):
        poly = dense.primitive(dense.squarefree(list(poly)))
        if len(poly) < 2:
            raise ValueError("defining polynomial must be non-constant")
        if interval.is_exact:
            x = interval.lo
            poly = [-x.numerator, x.denominator]
        self.poly = poly
        self.lo = Fraction(interval.lo)
        self.hi = Fraction(interval.hi)

    @classmethod
    def rational(cls, x):
        return cls([-Fraction(x).numerator, Fraction(x).denominator],
                   IsolatingInterval.point(x))

    @classmethod
    def roots_of(cls, poly):
        """All real roots of a univariate polynomial, sorted."""
        sf = dense.squarefree(list(poly))
        return [cls(sf, iv) for iv in isolate_roots(sf)]

    @property
    def is_rational(self):
        return len(self.poly) == 2

    @property
    def value(self):
        if not self.is_rational:
            raise ValueError("not a rational number")
        return Fraction(-self.poly[0], self.poly[1])

    def __float__(self):
        if self.is_rational:
            return float(self.value)
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        if self.is_rational:
            return f"RealAlgebraic({self.value})"
        return f"RealAlgebraic(root of {self.poly} in ({self.lo}, {self.hi}))"

    # -- refinement ----------------------------------------------------------

    def _set_rational(self, x):
        self.poly = [-x.numerator, x.denominator]
        self.lo = self.hi = x

    def bisect(self):
        if self.is_rational:
            return
        mid = (self.lo + self.hi) / 2
        s = dense.sign_at(self.poly, mid)
        if s == 0:
            self._set_rational(mid)
        elif s == dense.sign_at(self.poly, self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width):
        while not self.is_rational and self.hi - self.lo > width:
            self.bisect()

    def interval(self):
        if self.is_rational:
            return IsolatingInterval.point(self.value)
        return IsolatingInterval.open(self.lo, self.hi)

    def separate_from(self, a):
        """Refine until the nonzero polynomial ``a`` has no root in the closed
        isolating interval.  ``a`` must not vanish at this number."""
        if self.is_rational:
            return
        while dense.sign_at(a, self.lo) == 0 or dense.sign_at(a, self.hi) == 0 or \
                count_roots_in(a, self.lo, self.hi) > 0:
            self.bisect()
            if self.is_rational:
                return

    # -- arithmetic in Q(x0) ---------------------------------------------------

    def reduce(self, a):
        a = dense.strip(list(a))
        if len(a) < len(self.poly):
            return a
        return dense.rem_q(a, self.poly)

    def is_zero(self, a):
        """Exact test ``a(x0) == 0``; may shrink the defining polynomial."""
        a = self.reduce(a)
        if not a:
            return True
        if self.is_rational:
            return dense.evaluate(a, self.value) == 0
        g = dense.zgcd(dense.to_int(a)[1], self.poly)
        if len(g) == 1:
            return False
        cofactor = dense.primitive(dense.exact_div(self.poly, g))
        # exactly one of g, cofactor vanishes inside the interval
        if count_roots_in(g, self.lo, self.hi) - (dense.sign_at(g, self.hi) == 0) > 0:
            self.poly = dense.primitive(g)
            if len(self.poly) == 2:
                self._set_rational(Fraction(-self.poly[0], self.poly[1]))
            return True
        self.poly = cofactor
        if len(self.poly) == 2:
            self._set_rational(Fraction(-self.poly[0], self.poly[1]))
        return False

    def sign(self, a):
        """Exact sign of ``a(x0)`` for a rational polynomial ``a``."""
        a = dense.strip(list(a))
        if not a:
            return 0
        if self.is_rational:
            v = dense.evaluate(a, self.value)
            return (v > 0) - (v < 0)
        if self.is_zero(a):
            return 0
        if self.is_rational:
            v = dense.evaluate(a, self.value)
            return (v > 0) - (v < 0)
        ai = dense.to_int(a)[1]
        self.separate_from(ai)
        if self.is_rational:
            v = dense.evaluate(a, self.value)
            return (v > 0) - (v < 0)
        return dense.sign_at(ai, self.lo)

    def compare(self, other):
        """-1, 0 or 1 according to ``self`` <, ==, > ``other``."""
        if isinstance(other, (int, Fraction)):
            return self.sign([-Fraction(other), 1])
        if self.is_rational and other.is_rational:
            a, b = self.value, other.value
            return (a > b) - (a < b)
        if self.is_rational:
            return -other.compare(self.value)
        if other.is_rational:
            return self.sign([-other.value, 1])
        g = dense.zgcd(self.poly, other.poly)
        if len(g) > 1 and self.is_zero(g) and other.is_zero(g):
            # both are roots of g; shrink until each interval holds one root of g
            for a in (self, other):
                while not a.is_rational and _roots_open(g, a.lo, a.hi) > 1:
                    a.bisect()
            if self.is_rational or other.is_rational:
                return self.compare(other)
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            if lo < hi and _roots_open(g, lo, hi) == 1:
                return 0
        while True:
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            self.bisect()
            other.bisect()
            if self.is_rational or other.is_rational:
                return self.compare(other)


def _roots_open(g, lo, hi):
    return count_roots_in(g, lo, hi) - (dense.sign_at(g, hi) == 0)


# ---------------------------------------------------------------------------
# polynomials in Y over Q(x0)


def fiber_of(P, alg):
    """Specialise a DenseBiPoly at ``X = x0``: list of reduced Y-coefficients."""
    return strip_fiber([alg.reduce(c) for c in P.y_coeffs()], alg)


def strip_fiber(p, alg):
    p = list(p)
    while p and alg.is_zero(p[-1]):
        p.pop()
    return p


def _fmul(a, b, alg):
    return alg.reduce(dense.mul(a, b))


def _clear(p):
    """Scale a fiber polynomial by a positive rational to integer entries."""
    L = 1
    for c in p:
        d = dense.lcm_denominator(c)
        L = L * d // gcd(L, d)
    if L == 1:
        return p
    return [[dense.norm(x * L) for x in c] for c in p]


def fiber_prem(u, v, alg):
    """Pseudo-remainder of fibers scaled by an even power of ``lc(v)``."""
    lv = v[-1]
    dv = len(v) - 1
    r = [list(c) for c in u]
    steps = 0
    while len(r) - 1 >= dv and r:
        k = len(r) - 1 - dv
        c = r[-1]
        r = [_fmul(x, lv, alg) for x in r]
        for i in range(dv + 1):
            if v[i]:
                r[k + i] = alg.reduce(dense.sub(r[k + i], dense.mul(c, v[i])))
        steps += 1
        r.pop()
        r = strip_fiber(r, alg)
    if steps % 2 == 1:
        r = [_fmul(x, lv, alg) for x in r]
    return _clear(strip_fiber(r, alg))


def fiber_derivative(p):
    return [[dense.norm(x * j) for x in p[j]] for j in range(1, len(p))]


def fiber_gcd(a, b, alg):
    """A gcd (up to a unit) of two fibers; ``gcd(0, 0)`` is ``[]``."""
    a, b = strip_fiber(a, alg), strip_fiber(b, alg)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, fiber_prem(a, b, alg)
    return a


def _fiber_sign_at(p, y, alg):
    if y == "+inf":
        return alg.sign(p[-1])
    if y == "-inf":
        s = alg.sign(p[-1])
        return s if (len(p) - 1) % 2 == 0 else -s
    y = Fraction(y)
    # sum_j c_j y^j as a single element of Q(x0)
    acc = []
    for c in reversed(p):
        acc = dense.add(dense.scale(acc, y), c)
    return alg.sign(acc)


def fiber_sturm(p, alg):
    p = strip_fiber(p, alg)
    if not p:
        raise ValueError("Sturm chain of the zero fiber")
    seq = [_clear(p)]
    if len(p) == 1:
        return seq
    seq.append(_clear(strip_fiber(fiber_derivative(p), alg)))
    while len(seq[-1]) > 1:
        r = fiber_prem(seq[-2], seq[-1], alg)
        if not r:
            break
        seq.append([dense.neg(c) for c in r])
    return seq


def fiber_count(p, alg, lo="-inf", hi="+inf", chain=None):
    """Distinct real roots in ``(lo, hi]`` of a fiber polynomial.

    Endpoints must not be roots unless the fiber is squarefree.
    """
    seq = chain if chain is not None else fiber_sturm(p, alg)
    if len(seq[0]) <= 1:
        return 0
    va = dense.sign_variations([_fiber_sign_at(q, lo, alg) for q in seq])
    vb = dense.sign_variations([_fiber_sign_at(q, hi, alg) for q in seq])
    return va - vb


def fiber_isolate(p, alg):
    """Rational isolating intervals for the real roots of a squarefree fiber.

    Returns a sorted list of ``(lo, hi)`` pairs with ``lo == hi`` for exact
    rational roots; open intervals have non-root endpoints.
    """
    seq = fiber_sturm(p, alg)
    total = fiber_count(p, alg, chain=seq)
    if total == 0:
        return []
    B = Fraction(1)
    while True:
        if _fiber_sign_at(seq[0], B, alg) != 0 and _fiber_sign_at(seq[0], -B, alg) != 0 \
                and fiber_count(p, alg, -B, B, chain=seq) == total:
            break
        B *= 2
    out = []
    stack = [(-B, B, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and _fiber_sign_at(seq[0], hi, alg) != 0 and _fiber_sign_at(seq[0], lo, alg) != 0:
            out.append((lo, hi))
            continue
        if n == 1 and _fiber_sign_at(seq[0], hi, alg) == 0:
            out.append((hi, hi))
            continue
        mid = (lo + hi) / 2
        nl = fiber_count(p, alg, lo, mid, chain=seq)
        stack.append((mid, hi, n - nl))
        stack.append((lo, mid, nl))
    out.sort()
    return out


def fiber_common_real_roots(polys, alg):
    """Number of distinct real ``y`` with ``P(x0, y) = 0`` for every ``P``.

    Returns ``None`` when all the fibers vanish identically.
    """
    g = []
    for P in polys:
        g = fiber_gcd(g, fiber_of(P, alg), alg)
    if not g:
        return None
    if len(g) == 1:
        return 0
    return fiber_count(g, alg)
