"""Kernels for dense univariate polynomials stored as coefficient lists.

A polynomial is a plain ``list`` of coefficients, lowest degree first, with
no trailing zeros (the zero polynomial is ``[]``).  Coefficients are ``int``
or :class:`fractions.Fraction`; functions whose name starts with ``z`` assume
integer coefficients.  Large integer products go through Kronecker
substitution so that Python's big-integer multiplication does the work.
"""

from fractions import Fraction
from math import gcd

KRONECKER_MIN = 12


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


def norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def qdiv(x, y):
    """Exact quotient of two rationals, returned as int when integral."""
    if type(x) is int and type(y) is int:
        q, r = divmod(x, y)
        if not r:
            return q
        return Fraction(x, y)
    return norm(Fraction(x) / y)


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return strip(r)


def sub(a, b):
    r = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        r[i] -= c
    return strip(r)


def neg(a):
    return [-c for c in a]


def scale(a, s):
    if not s:
        return []
    return [c * s for c in a]


def shift(a, k):
    return [0] * k + list(a) if a else []


def _pack(a, bits):
    v = 0
    for c in reversed(a):
        v = (v << bits) + c
    return v


def _unpack(v, bits, n):
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    for _ in range(n):
        x = v & mask
        v >>= bits
        if x >= half:
            x -= full
            v += 1
        out.append(x)
    return strip(out)


def _all_int(a):
    for c in a:
        if type(c) is not int:
            return False
    return True


def mul(a, b):
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if min(la, lb) >= KRONECKER_MIN and _all_int(a) and _all_int(b):
        ma = max(abs(c) for c in a)
        mb = max(abs(c) for c in b)
        bits = (ma * mb * min(la, lb)).bit_length() + 1
        return _unpack(_pack(a, bits) * _pack(b, bits), bits, la + lb - 1)
    r = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return strip(r)


def power(a, e):
    r = [1]
    while e:
        if e & 1:
            r = mul(r, a)
        e >>= 1
        if e:
            a = mul(a, a)
    return r


def deriv(a):
    return strip([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def sign_at(a, x):
    """Sign of ``a(x)`` for rational ``x`` using integer arithmetic only."""
    if not a:
        return 0
    if type(x) is int:
        v = evaluate(a, x)
    else:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        v = 0
        qk = 1
        # homogenised Horner: sum c_i p^i q^(n-i); q > 0 keeps the sign
        for c in reversed(a):
            v = v * p + c * qk
            qk *= q
        if not _all_int(a):
            v = Fraction(v)
    return (v > 0) - (v < 0)


def compose_linear(a, s, t):
    """Return ``a(s*x + t)``."""
    r = []
    for c in reversed(a):
        r = add(mul(r, [t, s]), [c] if c else [])
    return r


def lcm_denominator(a):
    L = 1
    for c in a:
        if type(c) is Fraction:
            d = c.denominator
            L = L // gcd(L, d) * d
    return L


def to_int(a):
    """Return ``(L, b)`` with ``b = L*a`` integral and ``L > 0`` minimal."""
    L = lcm_denominator(a)
    if L == 1:
        return 1, [int(c) for c in a]
    return L, [int(c * L) for c in a]


def content(a):
    return gcd(*a) if a else 0


def primitive(a):
    """Integer primitive part with positive leading coefficient."""
    if not a:
        return []
    if not _all_int(a):
        a = to_int(a)[1]
    g = gcd(*a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def monic(a):
    if not a:
        return []
    lc = a[-1]
    if lc == 1:
        return list(a)
    return [qdiv(c, lc) for c in a]


def divmod_q(a, b):
    """Euclidean division over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    if len(r) <= db:
        return [], strip(r)
    q = [0] * (len(r) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c:
            c = qdiv(c, lb)
            q[k] = c
            for i in range(db + 1):
                if b[i]:
                    r[k + i] = norm(r[k + i] - c * b[i])
    return strip(q), strip(r[:db])


def rem_q(a, b):
    return divmod_q(a, b)[1]


def prem(a, b):
    """Pseudo-remainder: ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        c = r[k + db]
        r = [x * lb for x in r]
        if c:
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    return strip(r[:db])


def exact_div(a, b):
    """Quotient ``a / b`` when ``b`` divides ``a`` exactly."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    if len(b) == 1:
        lb = b[0]
        return [qdiv(c, lb) for c in a]
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c:
            c = qdiv(c, lb)
            q[k] = c
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return strip(q)


def zgcd(a, b):
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)
    return a


def gcd_q(a, b):
    """Monic gcd over the rationals; ``gcd(0, 0)`` is ``[]``."""
    if not a and not b:
        return []
    return monic(zgcd(a, b))


def squarefree(a):
    """Primitive squarefree part of a nonzero polynomial."""
    a = primitive(a)
    if len(a) <= 2:
        return a
    g = zgcd(a, deriv(a))
    if len(g) == 1:
        return a
    return primitive(exact_div(a, g))


def sign_variations(seq):
    v = 0
    last = 0
    for c in seq:
        if c:
            s = 1 if c > 0 else -1
            if last and s != last:
                v += 1
            last = s
    return v


def cauchy_bound(a):
    """A power of two strictly larger than the modulus of every root."""
    lc = abs(a[-1])
    m = max((abs(Fraction(c)) for c in a[:-1]), default=0)
    b = 1 + m / lc
    k = 1
    while k <= b:
        k *= 2
    return k


def det_bareiss(M):
    """Determinant of a square matrix whose entries are integer polynomials."""
    n = len(M)
    if n == 0:
        return [1]
    M = [list(row) for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                v = mul(rowi[j], pk)
                if mik and rowk[j]:
                    v = sub(v, mul(mik, rowk[j]))
                if prev != [1] and v:
                    v = exact_div(v, prev)
                rowi[j] = v
        prev = pk
    d = M[n - 1][n - 1]
    return neg(d) if sign < 0 else d


def det_numeric(M):
    """Determinant of a square matrix of rationals (fraction-free Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    M = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                M[i][j] = qdiv(M[i][j] * pk - mik * M[k][j], prev)
        prev = pk
    return norm(sign * M[n - 1][n - 1])
