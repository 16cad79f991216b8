"""Wronskians of the functions ``x**a_j * phi(x)**b_j`` along a curve branch.

For a branch ``y = phi(x)`` of ``F = 0`` each derivative has the shape

    (x**a phi**b)^(p) = x**(a-p) phi**(b-p) T_{a,b,p}(x, phi) / F_Y**(2p)

with a polynomial ``T_{a,b,p}`` depending only on ``F``.  Pulling the
monomial factors out of the rows and columns of the Wronskian matrix leaves

    W_s = x**(A - C(s,2)) phi**(B - C(s,2)) T_s(x, phi) / F_Y**(s(s-1))

where ``T_s`` is the determinant of the ``T`` entries.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd

from . import dense
from .errors import FYZero, LengthMismatch
from .implicit import _check_point, phi_derivatives
from .poly import DenseBiPoly, as_rational


@dataclass(frozen=True)
class BasisFamily:
    pairs: tuple
    s: int = None

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if not pairs:
            raise ValueError("empty basis family")
        if len(set(pairs)) != len(pairs):
            raise ValueError("exponent pairs must be distinct")
        if any(a < 0 or b < 0 for a, b in pairs):
            raise ValueError("exponents must be non-negative")
        s = len(pairs) if self.s is None else self.s
        if not 1 <= s <= len(pairs):
            raise ValueError("prefix length out of range")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "s", s)

    @property
    def t(self):
        return len(self.pairs)

    def prefix(self, s):
        return BasisFamily(self.pairs, s)


@dataclass(frozen=True)
class FactoredWronskian:
    s: int
    x_exponent: int
    phi_exponent: int
    fy_power: int
    T: DenseBiPoly
    degree_bound: int

    @property
    def degree_ok(self):
        return self.T.deg_x <= self.degree_bound and self.T.deg_y <= self.degree_bound

    def evaluate(self, F, x, y):
        """Value at a curve point; ``None`` where a negative power meets a zero base."""
        x, y = as_rational(x), as_rational(y)
        fy = F.partial(0, 1).eval(x, y)
        if (x == 0 and self.x_exponent < 0) or (y == 0 and self.phi_exponent < 0):
            return None
        v = Fraction(self.T.eval(x, y))
        v *= Fraction(x) ** self.x_exponent if self.x_exponent else 1
        v *= Fraction(y) ** self.phi_exponent if self.phi_exponent else 1
        v /= Fraction(fy) ** self.fy_power
        return dense.norm(v)


@dataclass(frozen=True)
class WronskianZeroCounts:
    Z: tuple

    def __post_init__(self):
        if any(z is None or z < 0 for z in self.Z):
            raise ValueError("zero counts must be finite and non-negative")


def _check_fy(F):
    FY = F.partial(0, 1)
    if FY.is_zero():
        raise FYZero("F does not depend on Y")
    return FY


def build_Tjp(F, alpha_j, beta_j, p):
    """``T_{j,p}`` with ``(x**a phi**b)^(p) = x**(a-p) phi**(b-p) T / F_Y**(2p)``."""
    if p < 0:
        raise ValueError("p must be non-negative")
    return _tjp_chain(F, alpha_j, beta_j, p)[p]


def _tjp_chain(F, a, b, p):
    FY = _check_fy(F)
    FX = F.partial(1, 0)
    FXY = F.partial(1, 1)
    FYY = F.partial(0, 2)
    X, Y = DenseBiPoly.X(), DenseBiPoly.Y()
    XY = X * Y
    FY2 = FY * FY
    FXFY = FX * FY
    # derivative of F_Y along the branch, times F_Y
    dFY = FXY * FY - FYY * FX
    T = DenseBiPoly.constant(1)
    out = [T]
    for q in range(p):
        TX, TY = T.partial(1, 0), T.partial(0, 1)
        T = ((a - q) * (Y * FY2 * T)
             - (b - q) * (X * FXFY * T)
             + XY * FY * (TX * FY - TY * FX)
             - 2 * q * (XY * T * dFY))
        out.append(T)
    return out


def build_Ts(F, family, s=None):
    """Factored Wronskian of the first ``s`` functions of ``family``."""
    s = family.s if s is None else s
    if not 1 <= s <= family.t:
        raise ValueError("s out of range")
    _check_fy(F)
    pairs = family.pairs[:s]
    mats = []
    L = 1
    for a, b in pairs:
        chain = _tjp_chain(F, a, b, s - 1)
        # scale the whole row so every entry is integral; det scales by the product
        Lr = 1
        for T in chain:
            Lt = T.to_int()[0]
            Lr = Lr * Lt // gcd(Lr, Lt)
        L *= Lr
        mats.append([T * Lr if Lr != 1 else T for T in chain])
    T = _det_bivariate(mats)
    if L != 1:
        T = T * Fraction(1, L)
    A = sum(a for a, _ in pairs)
    B = sum(b for _, b in pairs)
    c = comb(s, 2)
    return FactoredWronskian(s, A - c, B - c, s * (s - 1), T, (1 + 2 * F.degree) * c)


def _det_bivariate(M):
    """Determinant of a square matrix of integer DenseBiPoly entries.

    Fraction-free elimination over Z[X, Y]: each division by the previous
    pivot is exact.
    """
    n = len(M)
    if n == 0:
        return DenseBiPoly.constant(1)
    from .poly import bi_div
    M = [list(r) for r in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return DenseBiPoly()
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                v = M[i][j] * pk - mik * M[k][j]
                if prev is not None and not v.is_zero():
                    v = bi_div(v, prev)
                M[i][j] = v
        prev = pk
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d


def _series_pow(ser, e, n):
    r = [Fraction(1)] + [Fraction(0)] * n
    base = list(ser)
    while e:
        if e & 1:
            r = _trunc_mul(r, base, n)
        e >>= 1
        if e:
            base = _trunc_mul(base, base, n)
    return r


def _trunc_mul(a, b, n):
    r = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        if a[i]:
            for j in range(n + 1 - i):
                if b[j]:
                    r[i + j] += a[i] * b[j]
    return r


def direct_wronskian(F, family, s, x, y):
    """Wronskian from the branch's derivatives, with no factoring.

    The derivatives of ``phi`` come from the implicit numerators; the basis
    functions are expanded as truncated Taylor series around ``x``.
    """
    x, y, _ = _check_point(F, x, y)
    n = s - 1
    ders = phi_derivatives(F, x, y, n)
    phi_ser = [Fraction(ders[k]) / factorial(k) for k in range(n + 1)]
    x_ser = [Fraction(x), Fraction(1)] + [Fraction(0)] * n
    x_ser = x_ser[:n + 1]
    M = []
    for a, b in family.pairs[:s]:
        f = _trunc_mul(_series_pow(x_ser, a, n), _series_pow(phi_ser, b, n), n)
        M.append([f[p] * factorial(p) for p in range(n + 1)])
    return dense.det_numeric(M)


def wronskian_value(F, family, s, x, y, check=True):
    """Wronskian ``W_s`` at the curve point ``(x, y)``.

    Computed directly; when ``check`` is set the factored form is evaluated
    as well and the two must agree exactly (the factored form is skipped
    only where a negative power of ``x`` or ``phi`` meets a zero base).
    """
    direct = direct_wronskian(F, family, s, x, y)
    if check:
        fw = build_Ts(F, family, s)
        fact = fw.evaluate(F, x, y)
        if fact is not None and fact != direct:
            raise ArithmeticError(f"factored Wronskian {fact} != direct {direct}")
    return direct


def theorem1_bound(t, Z):
    """``t - 1 + Z(W_t) + Z(W_{t-1}) + 2 * sum_{j <= t-2} Z(W_j)``; ``Z(W_1)`` when ``t == 1``."""
    Z = tuple(Z.Z if isinstance(Z, WronskianZeroCounts) else Z)
    if len(Z) != t or t < 1:
        raise LengthMismatch(f"expected {t} zero counts, got {len(Z)}")
    if t == 1:
        return Z[0]
    return t - 1 + Z[t - 1] + Z[t - 2] + 2 * sum(Z[:t - 2])


def wronskian_zero_counts(F, family, decomposition, interval_index, branch_index):
    """``Z(W_1), ..., Z(W_t)`` on one branch over one interval.

    Each ``W_s`` is a monomial in ``x`` and ``phi`` times ``T_s(x, phi)``
    over a power of ``F_Y`` (nonzero on the interval).  The zeros of
    ``T_s`` along the branch, plus ``x = 0`` or ``phi = 0`` when the
    matching exponent is positive, are counted exactly.  With a negative
    exponent a zero of ``T_s`` at ``x = 0`` (or ``phi = 0``) may be cancelled
    by the monomial, so the count is then an upper bound.  Returns ``None``
    if some ``T_s`` vanishes identically on the branch.
    """
    from .intersect import branch_zeros

    X, Y = DenseBiPoly.X(), DenseBiPoly.Y()
    Z = []
    for s in range(1, family.t + 1):
        fw = build_Ts(F, family, s)
        P = fw.T
        if fw.x_exponent > 0:
            P = P * X
        if fw.phi_exponent > 0:
            P = P * Y
        z = branch_zeros(decomposition, interval_index, branch_index, P)
        if z is None:
            return None
        Z.append(z)
    return WronskianZeroCounts(tuple(Z))
