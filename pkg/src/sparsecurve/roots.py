"""Real roots of univariate rational polynomials.

Counting is done with Sturm sequences over the integers (signed primitive
pseudo-remainders), isolation by bisection driven by those counts.  The
convention throughout is that counts are taken on half-open intervals
``(lo, hi]``, so adjacent counts add up.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

import mpmath

from . import dense
from .errors import NotIsolating, ZeroInput
from .poly import SparseBiPoly, UniPoly, as_rational


@dataclass(frozen=True)
class IsolatingInterval:
    """Either the exact rational point ``lo == hi`` or the open interval
    ``(lo, hi)``; in both cases it holds exactly one root of its source."""

    kind: str
    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, x):
        x = Fraction(x)
        return cls("exact-point", x, x)

    @classmethod
    def open(cls, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("open interval needs lo < hi")
        return cls("open-interval", lo, hi)

    @property
    def is_exact(self):
        return self.kind == "exact-point"

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x):
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi

    def __float__(self):
        return float(self.midpoint)


@dataclass(frozen=True)
class SturmChain:
    sequence: tuple

    def variations_at(self, x):
        """Sign variations at a rational ``x``; ``None`` means -inf, and
        ``+inf``/``-inf`` strings are accepted too."""
        return dense.sign_variations([_sign_at_extended(p, x) for p in self.sequence])

    def count(self, lo=None, hi=None):
        """Distinct real roots in ``(lo, hi]``; ``None`` stands for infinity."""
        a = "-inf" if lo is None else lo
        b = "+inf" if hi is None else hi
        if lo is not None and hi is not None and not lo < hi:
            return 0
        return self.variations_at(a) - self.variations_at(b)


def _sign_at_extended(p, x):
    if x == "+inf":
        return 1 if p[-1] > 0 else -1
    if x == "-inf":
        s = 1 if p[-1] > 0 else -1
        return s if (len(p) - 1) % 2 == 0 else -s
    return dense.sign_at(p, x)


def _coeff_list(P):
    if isinstance(P, UniPoly):
        return list(P.coeffs)
    return dense.strip([as_rational(c) for c in P])


def sturm_chain_int(a):
    """Sturm sequence of the squarefree part of ``a`` as integer lists."""
    p0 = dense.squarefree(a)
    seq = [p0]
    if len(p0) <= 1:
        return tuple(seq)
    p1 = dense.primitive(dense.deriv(p0))
    seq.append(p1)
    while len(seq[-1]) > 1:
        u, v = seq[-2], seq[-1]
        r = dense.prem(u, v)
        if not r:
            break
        # prem scales by lc(v)^(deg u - deg v + 1); keep only positive factors
        if v[-1] < 0 and (len(u) - len(v) + 1) % 2 == 1:
            r = dense.neg(r)
        g = dense.content(r)
        seq.append([-(c // g) for c in r])
    return tuple(seq)


def sturm_chain(P):
    c = _coeff_list(P)
    if not c:
        raise ZeroInput("Sturm chain of the zero polynomial")
    return SturmChain(tuple(UniPoly(s) for s in _sturm_cached(tuple(c))))


@lru_cache(maxsize=4096)
def _sturm_cached(c):
    return sturm_chain_int(list(c))


def count_roots_in(P, lo=None, hi=None):
    """Number of distinct real roots of ``P`` in ``(lo, hi]``.

    ``lo=None`` is -infinity and ``hi=None`` is +infinity.
    """
    c = _coeff_list(P)
    if not c:
        raise ZeroInput("cannot count roots of the zero polynomial")
    if len(c) == 1:
        return 0
    lo = None if lo is None or lo == -math.inf else as_rational(lo)
    hi = None if hi is None or hi == math.inf else as_rational(hi)
    seq = _sturm_cached(tuple(c))
    if lo is not None and hi is not None and not lo < hi:
        return 0
    va = dense.sign_variations([_sign_at_extended(p, "-inf" if lo is None else lo) for p in seq])
    vb = dense.sign_variations([_sign_at_extended(p, "+inf" if hi is None else hi) for p in seq])
    return va - vb


def _count_open(seq, lo, hi):
    """Roots in the open interval ``(lo, hi)`` from a cached Sturm chain."""
    va = dense.sign_variations([dense.sign_at(p, lo) for p in seq])
    vb = dense.sign_variations([dense.sign_at(p, hi) for p in seq])
    n = va - vb
    if dense.sign_at(seq[0], hi) == 0:
        n -= 1
    return n


def isolate_roots(P):
    """Sorted isolating intervals, one per distinct real root of ``P``.

    Rational roots met by bisection are returned as exact points; the
    endpoints of every open interval are guaranteed not to be roots.
    """
    c = _coeff_list(P)
    if not c:
        raise ZeroInput("cannot isolate roots of the zero polynomial")
    sf = dense.squarefree(c)
    if len(sf) <= 1:
        return []
    if len(sf) == 2:
        return [IsolatingInterval.point(Fraction(-sf[0], sf[1]))]
    seq = _sturm_cached(tuple(sf))
    B = Fraction(dense.cauchy_bound(sf))
    out = []
    # stack of (lo, hi, count in (lo, hi]) processed left to right
    total = dense.sign_variations([_sign_at_extended(p, -B) for p in seq]) - \
        dense.sign_variations([_sign_at_extended(p, B) for p in seq])
    stack = [(-B, B, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            if dense.sign_at(sf, hi) == 0:
                out.append(IsolatingInterval.point(hi))
            else:
                out.append(_clean_open(sf, seq, lo, hi))
            continue
        mid = (lo + hi) / 2
        vm = dense.sign_variations([dense.sign_at(p, mid) for p in seq])
        vlo = dense.sign_variations([dense.sign_at(p, lo) for p in seq])
        nl = vlo - vm
        stack.append((mid, hi, n - nl))
        stack.append((lo, mid, nl))
    out.sort(key=lambda iv: iv.lo)
    return out


def _clean_open(sf, seq, lo, hi):
    """Shrink ``(lo, hi]`` holding one root (not at ``hi``) until neither
    endpoint is a root; may end on an exact rational root."""
    while dense.sign_at(sf, lo) == 0:
        mid = (lo + hi) / 2
        s = dense.sign_at(sf, mid)
        if s == 0:
            return IsolatingInterval.point(mid)
        if _count_open(seq, mid, hi) == 1:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval.open(lo, hi)


def refine(iv, P, width):
    """Bisect ``iv`` until it is at most ``width`` wide, keeping its root."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    c = _coeff_list(P)
    if not c:
        raise ZeroInput("cannot refine against the zero polynomial")
    if iv.is_exact:
        if dense.sign_at(c, iv.lo) != 0:
            raise NotIsolating(f"{iv.lo} is not a root")
        return iv
    sf = dense.squarefree(c)
    seq = _sturm_cached(tuple(sf))
    lo, hi = iv.lo, iv.hi
    if dense.sign_at(sf, lo) == 0 or dense.sign_at(sf, hi) == 0 or _count_open(seq, lo, hi) != 1:
        raise NotIsolating(f"({lo}, {hi}) does not isolate a single root")
    s_lo = dense.sign_at(sf, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = dense.sign_at(sf, mid)
        if s == 0:
            return IsolatingInterval.point(mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval.open(lo, hi)


# ---------------------------------------------------------------------------
# sparse bounds


def _sparse_sequence(P):
    """Coefficients ordered by exponent for a univariate sparse input."""
    if isinstance(P, UniPoly):
        return [c for c in P.coeffs if c]
    if isinstance(P, SparseBiPoly):
        terms = P.terms
        if any(a for _, a, _ in terms) and any(b for _, _, b in terms):
            raise ValueError("polynomial involves both variables")
        key = 1 if all(b == 0 for _, _, b in terms) else 2
        return [t[0] for t in sorted(terms, key=lambda t: t[key])]
    # sequence of (coeff, exponent)
    return [c for c, _ in sorted(P, key=lambda t: t[1]) if c]


def descartes_positive_bound(P):
    """Sign variations of the coefficient sequence (Descartes' rule)."""
    seq = _sparse_sequence(P)
    if not seq:
        raise ZeroInput("Descartes bound of the zero polynomial")
    return dense.sign_variations(seq)


def sparse_real_bound(t):
    """Distinct real roots of a ``t``-term univariate polynomial: ``2t - 1``."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return 2 * t - 1


def sparse_sign(terms, x, max_prec=1 << 16, exact_bits=1 << 26):
    """Exact sign of ``sum c * x**e`` at rational ``x`` for huge exponents.

    ``terms`` is a sequence of ``(coeff, exponent)``.  The smallest power of
    ``x`` is factored out first.  Small instances are evaluated exactly;
    otherwise the dominant-term structure is resolved in the log domain with
    increasing precision, falling back to exact evaluation (within
    ``exact_bits``) when the sum is too close to zero to certify.
    """
    x = Fraction(x)
    acc = {}
    for c, e in terms:
        if c:
            acc[int(e)] = acc.get(int(e), 0) + Fraction(c)
    terms = [(c, e) for e, c in acc.items() if c]
    if not terms:
        return 0
    if x == 0:
        c0 = sum(c for c, e in terms if e == 0)
        return (c0 > 0) - (c0 < 0)
    emin = min(e for _, e in terms)
    outer = -1 if (x < 0 and emin % 2) else 1
    terms = [(c, e - emin) for c, e in terms]
    if abs(x) == 1:
        v = sum(c * (x if e % 2 else 1) for c, e in terms)
        return outer * ((v > 0) - (v < 0))
    size = max(abs(x.numerator), x.denominator).bit_length()
    bits = max(e for _, e in terms) * size
    if bits <= 200_000:
        v = sum(c * x**e for c, e in terms)
        return outer * ((v > 0) - (v < 0))
    sgn_x = 1 if x > 0 else -1
    ax = abs(x)
    prec = 128
    while prec <= max_prec:
        with mpmath.workprec(prec):
            lx = mpmath.log(mpmath.mpf(ax.numerator)) - mpmath.log(mpmath.mpf(ax.denominator))
            vals = []
            for c, e in terms:
                s = (1 if c > 0 else -1) * (sgn_x if e % 2 else 1)
                lg = mpmath.log(mpmath.mpf(abs(c.numerator))) - mpmath.log(mpmath.mpf(c.denominator)) + e * lx
                vals.append((lg, s))
            top = max(lg for lg, _ in vals)
            total = mpmath.fsum(s * mpmath.exp(lg - top) for lg, s in vals)
            # relative rounding error per term is about len * 2^-(prec - log2 e)
            slack = mpmath.mpf(2) ** (-(prec // 2)) * len(vals)
            if abs(total) > slack:
                return outer * (1 if total > 0 else -1)
        prec *= 2
    if bits <= exact_bits:
        v = sum(c * x**e for c, e in terms)
        return outer * ((v > 0) - (v < 0))
    raise ArithmeticError("could not certify the sign of a sparse sum")


def sparse_sign_changes(terms, points):
    """Sign changes of a sparse univariate sum along sorted sample points
    (a lower bound on its number of distinct real roots)."""
    signs = [sparse_sign(terms, p) for p in points]
    changes = 0
    last = 0
    zeros = 0
    for s in signs:
        if s == 0:
            zeros += 1
            last = 0
            continue
        if last and s != last:
            changes += 1
        last = s
    return changes + zeros
