"""Higher derivatives of powers and of implicitly defined branch functions.

Two pieces live here:

* the expansion of ``(f**alpha)^(p)`` as a sum over sequences ``s`` with
  ``sum(i * s_i) == p`` of ``beta(alpha, s) * f**(alpha - |s|) * prod (f^(k))**s_k``;
  the coefficients are polynomials in ``alpha`` produced by differentiating
  symbolically, never read from a table;
* the numerators ``S_k`` with ``phi^(k) = S_k / F_Y**(2k - 1)`` for a branch
  ``y = phi(x)`` of ``F(x, y) = 0``, both as formal polynomials in the
  partial derivatives ``F_{X^a Y^b}`` and composed for a concrete ``F``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import dense
from .errors import NotOnCurve, SingularFiber
from .poly import DenseBiPoly, UniPoly, as_rational

DEFAULT_MAX_ORDER = 12


# ---------------------------------------------------------------------------
# partition sequences


@dataclass(frozen=True)
class PartitionSequence:
    """Finitely supported ``(s_1, s_2, ...)``; stored without trailing zeros."""

    s: tuple

    def __post_init__(self):
        s = tuple(self.s)
        while s and s[-1] == 0:
            s = s[:-1]
        object.__setattr__(self, "s", s)

    @property
    def size(self):
        return sum(self.s)

    @property
    def order(self):
        return sum((i + 1) * v for i, v in enumerate(self.s))

    def __getitem__(self, i):
        """``s_i`` with 1-based ``i``; zero beyond the support."""
        return self.s[i - 1] if 1 <= i <= len(self.s) else 0

    def padded(self, p):
        return self.s + (0,) * (p - len(self.s))

    def bump(self, i, delta=1):
        s = list(self.padded(max(i, len(self.s))))
        s[i - 1] += delta
        return PartitionSequence(tuple(s))


@lru_cache(maxsize=None)
def _partitions(p, largest):
    if p == 0:
        return ((),)
    out = []
    for part in range(min(p, largest), 0, -1):
        for rest in _partitions(p - part, part):
            out.append((part,) + rest)
    return tuple(out)


def enumerate_partitions(p):
    """All sequences ``s`` with ``sum(i * s_i) == p``, each once."""
    if p < 1:
        raise ValueError("p must be at least 1")
    out = []
    for parts in _partitions(p, p):
        s = [0] * p
        for part in parts:
            s[part - 1] += 1
        out.append(PartitionSequence(tuple(s)))
    return out


# ---------------------------------------------------------------------------
# derivatives of f**alpha


@dataclass(frozen=True)
class PowerDerivativeExpansion:
    """``(f**alpha)^(p)`` as ``{s: beta_{alpha,s}}`` with ``beta`` a UniPoly in alpha."""

    p: int
    terms: tuple  # of (UniPoly, PartitionSequence)

    def coefficient(self, s):
        if not isinstance(s, PartitionSequence):
            s = PartitionSequence(tuple(s))
        for c, part in self.terms:
            if part == s:
                return c
        return UniPoly()

    def evaluate(self, alpha, derivs):
        """Value for a numeric ``alpha`` given ``derivs = [f, f', ..., f^(p)]``.

        ``f`` must be nonzero when ``alpha - |s|`` is negative.
        """
        alpha = as_rational(alpha)
        f = as_rational(derivs[0])
        total = 0
        for c, part in self.terms:
            v = Fraction(c(alpha))
            if not v:
                continue
            e = alpha - part.size
            if isinstance(e, Fraction) and e.denominator != 1:
                raise ValueError("non-integer exponents are not supported")
            v *= Fraction(f) ** int(e)
            for k in range(1, len(part.s) + 1):
                if part[k]:
                    v *= Fraction(derivs[k]) ** part[k]
            total += v
        return dense.norm(Fraction(total))


@lru_cache(maxsize=None)
def _power_terms(p):
    if p == 0:
        return {PartitionSequence(()): (1,)}
    prev = _power_terms(p - 1)
    out = {}

    def put(part, coeffs):
        old = out.get(part, ())
        out[part] = tuple(dense.add(list(old), list(coeffs)))

    for part, beta in prev.items():
        beta = list(beta)
        # d/dx f**(alpha - |s|) = (alpha - |s|) f**(alpha - |s| - 1) f'
        put(part.bump(1), dense.mul(beta, [-part.size, 1]))
        # d/dx (f^(k))**s_k = s_k (f^(k))**(s_k - 1) f^(k+1)
        for k in range(1, len(part.s) + 1):
            sk = part[k]
            if sk:
                put(part.bump(k, -1).bump(k + 1), dense.scale(beta, sk))
    return {k: v for k, v in out.items() if v}


def power_derivative(alpha, p):
    """Expansion of the ``p``-th derivative of ``f**alpha``.

    ``alpha`` is kept symbolic; pass any label (it is only recorded in
    the repr).  Coefficients are polynomials in alpha.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    terms = _power_terms(p)
    ordered = sorted(terms.items(), key=lambda kv: kv[0].padded(p), reverse=True)
    return PowerDerivativeExpansion(p, tuple((UniPoly(c), s) for s, c in ordered))


# ---------------------------------------------------------------------------
# formal polynomials in the partials F_{X^a Y^b} (and phi^(i) while recursing)


class FormalPoly:
    """Sparse polynomial over Q in named variables.

    Variables are ``("F", a, b)`` for ``F_{X^a Y^b}`` and ``("phi", i)`` for
    ``phi^(i)``.  Monomials are sorted tuples of ``(variable, exponent)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, v):
        return cls({((v, 1),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def __add__(self, other):
        r = dict(self.terms)
        for m, c in other.terms.items():
            r[m] = r.get(m, 0) + c
        return FormalPoly(r)

    def __neg__(self):
        return FormalPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FormalPoly):
            return FormalPoly({m: c * other for m, c in self.terms.items()})
        r = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                r[m] = r.get(m, 0) + c1 * c2
        return FormalPoly(r)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = FormalPoly.const(1)
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        return isinstance(other, FormalPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def evaluate(self, values):
        """Substitute numbers (or any ring elements) for the variables."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for var, e in m:
                v = v * values[var] ** e
            total = total + v
        return total

    def derive(self):
        """Total derivative along ``y = phi(x)``."""
        r = {}
        for m, c in self.terms.items():
            for idx, (var, e) in enumerate(m):
                rest = m[:idx] + ((var, e - 1),) + m[idx + 1:]
                rest = tuple((v, k) for v, k in rest if k)
                for coeff, new in _dvar(var):
                    mm = _mono_mul(rest, new)
                    r[mm] = r.get(mm, 0) + c * e * coeff
        return FormalPoly(r)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            names = "*".join(_var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            parts.append(f"{c}" + (f"*{names}" if names else ""))
        return " + ".join(parts)


def _var_name(v):
    if v[0] == "F":
        return "F_" + "X" * v[1] + "Y" * v[2]
    return f"phi{v[1]}"


def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _dvar(var):
    """Derivative of one variable as a list of (coefficient, monomial)."""
    if var[0] == "F":
        _, a, b = var
        # d/dx F_ab(x, phi(x)) = F_{a+1,b} + phi' F_{a,b+1}
        return [(1, ((("F", a + 1, b), 1),)),
                (1, tuple(sorted({(("F", a, b + 1), 1), (("phi", 1), 1)})))]
    return [(1, ((("phi", var[1] + 1), 1),))]


FY = ("F", 0, 1)


@lru_cache(maxsize=None)
def _recursion(k):
    """``(D_k, R_k)`` with ``D_k = phi^(k) * F_Y + R_k``."""
    if k == 1:
        D = FormalPoly.var(("F", 1, 0)) + FormalPoly.var(("phi", 1)) * FormalPoly.var(FY)
    else:
        D = _recursion(k - 1)[0].derive()
    lead = ((FY, 1), (("phi", k), 1))
    lead = tuple(sorted(lead))
    R = FormalPoly({m: c for m, c in D.terms.items() if m != lead})
    if D.terms.get(lead) != 1:
        raise AssertionError("unexpected leading term in the implicit recursion")
    return D, R


@lru_cache(maxsize=None)
def formal_numerator(k):
    """``S_k`` as a :class:`FormalPoly` in the partials ``F_{X^a Y^b}``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return -FormalPoly.var(("F", 1, 0))
    _, R = _recursion(k)
    out = FormalPoly()
    for m, c in R.terms.items():
        weight = 0
        part = FormalPoly.const(c)
        for var, e in m:
            if var[0] == "phi":
                weight += e * (2 * var[1] - 1)
                part = part * formal_numerator(var[1]) ** e
            else:
                part = part * FormalPoly({((var, e),): 1})
        pad = 2 * k - 2 - weight
        if pad < 0:
            raise AssertionError("negative F_Y padding in the implicit recursion")
        if pad:
            part = part * FormalPoly({((FY, pad),): 1})
        out = out - part
    return out


def recursion_identity(k):
    """The formal ``D_k`` (useful to check ``D_k == 0`` along a curve)."""
    return _recursion(k)[0]


@dataclass(frozen=True)
class ImplicitDerivative:
    k: int
    S: FormalPoly
    denominator_exponent: int
    composed: DenseBiPoly = None
    certificates: dict = field(default_factory=dict)

    @property
    def formal_degree(self):
        return self.S.degree


def implicit_numerator(F, k, max_order=DEFAULT_MAX_ORDER, compose=True):
    """``S_k`` for ``F`` with degree certificates.

    The certificates record the formal degree against ``2k - 1`` and the
    composed total degree against ``(2k - 1) * deg F``.
    """
    if F.is_zero():
        raise ValueError("F must be nonzero")
    if not 1 <= k <= max_order:
        raise ValueError(f"k must be in 1..{max_order}")
    S = formal_numerator(k)
    certs = {"formal_degree": S.degree, "formal_bound": 2 * k - 1,
             "formal_ok": S.degree <= 2 * k - 1}
    composed = None
    if compose:
        partials = {v: F.partial(v[1], v[2]) for v in S.variables()}
        composed = S.evaluate(partials)
        if not isinstance(composed, DenseBiPoly):
            composed = DenseBiPoly.constant(composed)
        certs.update(composed_degree=composed.degree,
                     composed_bound=(2 * k - 1) * F.degree,
                     composed_ok=composed.degree <= (2 * k - 1) * F.degree)
    return ImplicitDerivative(k, S, 2 * k - 1, composed, certs)


def _check_point(F, x, y):
    x, y = as_rational(x), as_rational(y)
    if F.eval(x, y) != 0:
        raise NotOnCurve(f"F({x}, {y}) != 0")
    fy = F.partial(0, 1).eval(x, y)
    if fy == 0:
        raise SingularFiber(f"F_Y vanishes at ({x}, {y})")
    return x, y, fy


def partial_values(F, x, y, order):
    """``{("F", a, b): F_{X^a Y^b}(x, y)}`` for ``a + b <= order``."""
    out = {}
    for a in range(order + 1):
        for b in range(order + 1 - a):
            out[("F", a, b)] = Fraction(F.partial(a, b).eval(x, y))
    return out


def eval_phi_derivative(F, k, x, y):
    """Exact ``phi^(k)(x)`` for the branch of ``F = 0`` through ``(x, y)``."""
    x, y, fy = _check_point(F, x, y)
    vals = partial_values(F, x, y, k)
    num = formal_numerator(k).evaluate(vals)
    return dense.norm(Fraction(num) / Fraction(fy) ** (2 * k - 1))


def phi_derivatives(F, x, y, order):
    """``[phi(x), phi'(x), ..., phi^(order)(x)]`` at a regular curve point."""
    x, y, fy = _check_point(F, x, y)
    vals = partial_values(F, x, y, order)
    out = [y]
    for k in range(1, order + 1):
        num = formal_numerator(k).evaluate(vals)
        out.append(dense.norm(Fraction(num) / Fraction(fy) ** (2 * k - 1)))
    return out


def branch_taylor(F, x, y, order):
    """Taylor coefficients of the branch through ``(x, y)`` up to ``h**order``.

    Solved order by order from ``F(x + h, y + c_1 h + ...) = 0``; this does
    not use ``S_k`` and serves as an independent check of it.
    """
    x, y, fy = _check_point(F, x, y)
    G = _translate(F, x, y)
    coeffs = [y]
    for n in range(1, order + 1):
        series = [Fraction(0)] + [Fraction(c) for c in coeffs[1:]] + [Fraction(0)]
        # coefficient of h**n in G(h, series) with c_n unknown enters as F_Y * c_n
        val = _series_eval(G, series, n)
        coeffs.append(dense.norm(-val / fy))
    return coeffs


def _translate(F, x, y):
    """``F(X + x, Y + y)`` as a dict of terms."""
    out = {}
    for (i, j), c in F.items():
        xi = dense.compose_linear([0] * i + [1], 1, x)
        yj = dense.compose_linear([0] * j + [1], 1, y)
        for a, ca in enumerate(xi):
            if ca:
                for b, cb in enumerate(yj):
                    if cb:
                        out[(a, b)] = out.get((a, b), 0) + c * ca * cb
    return {k: v for k, v in out.items() if v}


def _series_mul(a, b, n):
    r = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[:n + 1]):
        if x:
            for j, y in enumerate(b[:n + 1 - i]):
                r[i + j] += x * y
    return r


def _series_eval(G, ser, n):
    """Coefficient of ``h**n`` in ``G(h, ser(h))``."""
    ser = (ser + [Fraction(0)] * (n + 1))[:n + 1]
    powers = [[Fraction(1)] + [Fraction(0)] * n]
    total = Fraction(0)
    for (a, b), c in G.items():
        if a > n:
            continue
        while len(powers) <= b:
            powers.append(_series_mul(powers[-1], ser, n))
        total += c * powers[b][n - a]
    return total


def derivatives_from_taylor(coeffs):
    return [dense.norm(Fraction(c) * factorial(i)) for i, c in enumerate(coeffs)]
