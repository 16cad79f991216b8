"""Exact univariate and bivariate polynomials over the rationals.

Coefficients are ``int`` or :class:`fractions.Fraction`; nothing in this
module ever touches floating point.  Bivariate polynomials come in two
flavours:

* :class:`DenseBiPoly` -- bounded degree, used for the curve ``F`` and for
  every polynomial built from it;
* :class:`SparseBiPoly` -- a list of terms whose exponents may be huge.  Only
  evaluation and differentiation stay sparse; anything else goes through
  :meth:`SparseBiPoly.to_dense`, which refuses exponents above a budget.
"""

from fractions import Fraction
from math import comb

from . import dense
from .errors import (BothConstantInAxis, BothZero, ExponentBudgetExceeded,
                     ParseError, ZeroInput)

MAX_EXPONENT = 2**31 - 1
DEFAULT_BUDGET = 64


def as_rational(c):
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return dense.norm(c)
    if isinstance(c, str):
        return dense.norm(Fraction(c.strip()))
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not accepted")
    return dense.norm(Fraction(c))


# ---------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense univariate polynomial, ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        self._c = tuple(dense.strip([as_rational(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj._c = tuple(coeffs)
        return obj

    @classmethod
    def x(cls):
        return cls._raw((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots, lc=1):
        c = [as_rational(lc)]
        for r in roots:
            c = dense.mul(c, [-as_rational(r), 1])
        return cls._raw(c)

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def lc(self):
        return self._c[-1] if self._c else 0

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other._c
        if isinstance(other, (int, Fraction)):
            return (other,) if other else ()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return UniPoly._raw(dense.add(list(self._c), list(o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return UniPoly._raw(dense.sub(list(self._c), list(o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return UniPoly._raw(dense.sub(list(o), list(self._c)))

    def __neg__(self):
        return UniPoly._raw(dense.neg(self._c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return UniPoly._raw(dense.mul(list(self._c), list(o)))

    __rmul__ = __mul__

    def __pow__(self, e):
        return UniPoly._raw(dense.power(list(self._c), e))

    def __divmod__(self, other):
        q, r = dense.divmod_q(list(self._c), list(self._coerce(other)))
        return UniPoly._raw(q), UniPoly._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return dense.norm(Fraction(dense.evaluate(self._c, as_rational(x))))

    def derivative(self, k=1):
        c = list(self._c)
        for _ in range(k):
            c = dense.deriv(c)
        return UniPoly._raw(c)

    def monic(self):
        return UniPoly._raw(dense.monic(list(self._c)))

    def primitive(self):
        return UniPoly._raw(dense.primitive(list(self._c)))

    def sign_at(self, x):
        return dense.sign_at(list(self._c), as_rational(x))

    def __repr__(self):
        return f"UniPoly({_format_uni(self._c)})"


def _format_coeff(c):
    return str(c) if type(c) is int else f"{c.numerator}/{c.denominator}"


def _format_uni(c, var="x"):
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if not a:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(a) == 1:
            s = mono
        elif mono:
            s = f"{_format_coeff(abs(a))}*{mono}"
        else:
            s = _format_coeff(abs(a))
        parts.append(("-" if a < 0 else "+", s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sg, s in parts[1:]:
        out += f" {sg} {s}"
    return out


def uni_gcd(A, B):
    """Monic gcd of two univariate polynomials over the rationals."""
    if A.is_zero() and B.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return UniPoly._raw(dense.gcd_q(list(A.coeffs), list(B.coeffs)))


def squarefree_part(A):
    """Monic polynomial with the same roots as ``A``, all simple."""
    if A.is_zero():
        raise ZeroInput("squarefree part of the zero polynomial")
    return UniPoly._raw(dense.monic(dense.squarefree(list(A.coeffs))))


# ---------------------------------------------------------------------------
# bivariate, dense


def _biterms_mul(a, b):
    """Product of two coefficient dicts keyed by ``(i, j)``."""
    if not a or not b:
        return {}
    na = len(a)
    nb = len(b)
    if na * nb > 400:
        ints_a = all(type(c) is int for c in a.values())
        ints_b = all(type(c) is int for c in b.values())
        if ints_a and ints_b:
            stride = max(i for i, _ in a) + max(i for i, _ in b) + 1
            ua = [0] * (max(i + stride * j for i, j in a) + 1)
            for (i, j), c in a.items():
                ua[i + stride * j] = c
            ub = [0] * (max(i + stride * j for i, j in b) + 1)
            for (i, j), c in b.items():
                ub[i + stride * j] = c
            prod = dense.mul(ua, ub)
            return {(k % stride, k // stride): c for k, c in enumerate(prod) if c}
    r = {}
    for (i, j), c in a.items():
        for (k, l), e in b.items():
            key = (i + k, j + l)
            r[key] = r.get(key, 0) + c * e
    return {k: dense.norm(v) for k, v in r.items() if v}


class DenseBiPoly:
    """Bivariate polynomial with a bounded-degree coefficient grid.

    Stored sparsely as ``{(i, j): c}`` meaning ``c * X**i * Y**j``; the grid
    view is available through :meth:`grid`.  Instances are immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for key, v in items:
                i, j = key
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                v = as_rational(v)
                if v:
                    c[(int(i), int(j))] = dense.norm(c.get((i, j), 0) + v)
            c = {k: v for k, v in c.items() if v}
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms):
        """From an iterable of ``(coeff, alpha, beta)``."""
        c = {}
        for coeff, a, b in terms:
            c[(a, b)] = c.get((a, b), 0) + as_rational(coeff)
        return cls(c)

    @classmethod
    def from_grid(cls, grid):
        return cls({(i, j): v for i, row in enumerate(grid)
                    for j, v in enumerate(row) if v})

    @classmethod
    def from_y_coeffs(cls, cols):
        """``cols[j]`` is the coefficient list (in X) of ``Y**j``."""
        return cls._raw({(i, j): v for j, col in enumerate(cols)
                         for i, v in enumerate(col) if v})

    @classmethod
    def from_x_coeffs(cls, rows):
        return cls._raw({(i, j): v for i, row in enumerate(rows)
                         for j, v in enumerate(row) if v})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def X(cls):
        return cls._raw({(1, 0): 1})

    @classmethod
    def Y(cls):
        return cls._raw({(0, 1): 1})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def degree(self):
        """Total degree; ``-1`` for the zero polynomial."""
        return max((i + j for i, j in self._c), default=-1)

    @property
    def deg_x(self):
        return max((i for i, _ in self._c), default=-1)

    @property
    def deg_y(self):
        return max((j for _, j in self._c), default=-1)

    def coefficient(self, i, j):
        return self._c.get((i, j), 0)

    def terms(self):
        """Sorted list of ``(coeff, alpha, beta)``."""
        return [(v, i, j) for (i, j), v in sorted(self._c.items())]

    def items(self):
        return self._c.items()

    def grid(self):
        if not self._c:
            return []
        g = [[0] * (self.deg_y + 1) for _ in range(self.deg_x + 1)]
        for (i, j), v in self._c.items():
            g[i][j] = v
        return g

    def y_coeffs(self):
        """List indexed by the power of Y of coefficient lists in X."""
        cols = [[] for _ in range(self.deg_y + 1)]
        for (i, j), v in self._c.items():
            col = cols[j]
            if len(col) <= i:
                col.extend([0] * (i + 1 - len(col)))
            col[i] = v
        return cols

    def x_coeffs(self):
        return self.swap().y_coeffs()

    def is_integral(self):
        return all(type(v) is int for v in self._c.values())

    def to_int(self):
        """Return ``(L, P)`` with ``P = L*self`` having integer coefficients."""
        L = dense.lcm_denominator(list(self._c.values()))
        if L == 1:
            return 1, self
        return L, DenseBiPoly._raw({k: int(v * L) for k, v in self._c.items()})

    def primitive(self):
        """Integer primitive multiple with positive leading term."""
        _, P = self.to_int()
        vals = list(P._c.values())
        if not vals:
            return P
        g = dense.content(vals)
        lead = P._c[max(P._c, key=lambda k: (k[1], k[0]))]
        if lead < 0:
            g = -g
        return DenseBiPoly._raw({k: v // g for k, v in P._c.items()})

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, DenseBiPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == DenseBiPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, DenseBiPoly):
            return other._c
        if isinstance(other, (int, Fraction)):
            return {(0, 0): other} if other else {}
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = dict(self._c)
        for k, v in o.items():
            s = r.get(k, 0) + v
            if s:
                r[k] = dense.norm(s)
            else:
                r.pop(k, None)
        return DenseBiPoly._raw(r)

    __radd__ = __add__

    def __neg__(self):
        return DenseBiPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + DenseBiPoly._raw({k: -v for k, v in o.items()})

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return DenseBiPoly._raw({})
            return DenseBiPoly._raw({k: dense.norm(v * other)
                                     for k, v in self._c.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DenseBiPoly._raw(_biterms_mul(self._c, o))

    __rmul__ = __mul__

    def __pow__(self, e):
        r = DenseBiPoly._raw({(0, 0): 1})
        base = self
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r

    def mul_monomial(self, a, b):
        return DenseBiPoly._raw({(i + a, j + b): v for (i, j), v in self._c.items()})

    # -- calculus and evaluation -------------------------------------------

    def partial(self, a=0, b=0):
        """Mixed partial derivative d^(a+b) / dX^a dY^b."""
        if a < 0 or b < 0:
            raise ValueError("derivative orders must be non-negative")
        r = {}
        for (i, j), v in self._c.items():
            if i >= a and j >= b:
                f = 1
                for k in range(a):
                    f *= i - k
                for k in range(b):
                    f *= j - k
                r[(i - a, j - b)] = v * f
        return DenseBiPoly._raw(r)

    def eval(self, x, y):
        x, y = as_rational(x), as_rational(y)
        total = 0
        for j, col in enumerate(self.y_coeffs()):
            if col:
                total += dense.evaluate(col, x) * y**j
        return dense.norm(Fraction(total))

    __call__ = eval

    def subs_x(self, x0):
        """Univariate polynomial in Y obtained by fixing ``X = x0``."""
        x0 = as_rational(x0)
        return UniPoly._raw(dense.strip([
            dense.norm(Fraction(dense.evaluate(col, x0))) if col else 0
            for col in self.y_coeffs()]))

    def subs_y(self, y0):
        """Univariate polynomial in X obtained by fixing ``Y = y0``."""
        return self.swap().subs_x(y0)

    def swap(self):
        return DenseBiPoly._raw({(j, i): v for (i, j), v in self._c.items()})

    def shear(self, lam):
        """``F(X + lam*Y, Y)``."""
        lam = as_rational(lam)
        if not lam:
            return self
        r = {}
        for (i, j), v in self._c.items():
            lp = 1
            for k in range(i + 1):
                # C(i, k) X^(i-k) (lam Y)^k
                key = (i - k, j + k)
                r[key] = r.get(key, 0) + v * comb(i, k) * lp
                lp *= lam
        return DenseBiPoly._raw({k: dense.norm(v) for k, v in r.items() if v})

    def homogeneous_top(self):
        d = self.degree
        return DenseBiPoly._raw({k: v for k, v in self._c.items() if k[0] + k[1] == d})

    def __repr__(self):
        return f"DenseBiPoly({format_bipoly(self)})"


def format_bipoly(P):
    if P.is_zero():
        return "0"
    parts = []
    for (i, j), a in sorted(P.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
        mono = "*".join(
            m for m in (("X" if i == 1 else f"X^{i}") if i else "",
                        ("Y" if j == 1 else f"Y^{j}") if j else "") if m)
        if mono and abs(a) == 1:
            s = mono
        elif mono:
            s = f"{_format_coeff(abs(a))}*{mono}"
        else:
            s = _format_coeff(abs(a))
        parts.append(("-" if a < 0 else "+", s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sg, s in parts[1:]:
        out += f" {sg} {s}"
    return out


# ---------------------------------------------------------------------------
# bivariate, sparse


class SparseBiPoly:
    """``G = sum a_j X^alpha_j Y^beta_j`` with exponents up to ``2**31 - 1``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        for coeff, a, b in terms:
            a, b = int(a), int(b)
            if not (0 <= a <= MAX_EXPONENT and 0 <= b <= MAX_EXPONENT):
                raise ValueError(f"exponent pair ({a}, {b}) out of range")
            acc[(a, b)] = acc.get((a, b), 0) + as_rational(coeff)
        self._terms = tuple((dense.norm(v), a, b)
                            for (a, b), v in sorted(acc.items()) if v)

    @classmethod
    def from_dense(cls, P):
        return cls(P.terms())

    @property
    def terms(self):
        return self._terms

    @property
    def t(self):
        return len(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def support(self):
        return [(a, b) for _, a, b in self._terms]

    @property
    def coeffs(self):
        return [c for c, _, _ in self._terms]

    def is_zero(self):
        return not self._terms

    @property
    def max_exponent(self):
        return max((max(a, b) for _, a, b in self._terms), default=0)

    @property
    def degree(self):
        return max((a + b for _, a, b in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, SparseBiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        return SparseBiPoly(self._terms + tuple(other.terms))

    def __sub__(self, other):
        return SparseBiPoly(self._terms + tuple((-c, a, b) for c, a, b in other.terms))

    def __neg__(self):
        return SparseBiPoly((-c, a, b) for c, a, b in self._terms)

    def __mul__(self, s):
        if not isinstance(s, (int, Fraction)):
            return NotImplemented
        return SparseBiPoly((c * s, a, b) for c, a, b in self._terms)

    __rmul__ = __mul__

    def eval(self, x, y):
        x, y = as_rational(x), as_rational(y)
        total = 0
        for c, a, b in self._terms:
            total += c * Fraction(x) ** a * Fraction(y) ** b
        return dense.norm(Fraction(total))

    __call__ = eval

    def partial(self, a=0, b=0):
        out = []
        for c, i, j in self._terms:
            if i >= a and j >= b:
                f = 1
                for k in range(a):
                    f *= i - k
                for k in range(b):
                    f *= j - k
                out.append((c * f, i - a, j - b))
        return SparseBiPoly(out)

    def to_dense(self, budget=DEFAULT_BUDGET):
        if self.max_exponent > budget:
            raise ExponentBudgetExceeded(
                f"exponent {self.max_exponent} exceeds the densification budget {budget}")
        return DenseBiPoly.from_terms(self._terms)

    def __repr__(self):
        return f"SparseBiPoly({format_bipoly(DenseBiPoly._raw({(a, b): c for c, a, b in self._terms}))})"


def evaluate(P, x, y):
    """Exact value of a dense or sparse bivariate polynomial at ``(x, y)``."""
    return P.eval(x, y)


def partial(P, a, b):
    return P.partial(a, b)


# ---------------------------------------------------------------------------
# resultants


def _int_y_coeffs(P):
    """Integer Y-major coefficients of ``L*P`` and the scale ``L``."""
    L, Q = P.to_int()
    return L, Q.y_coeffs()


def sylvester_matrix(a, b):
    """Sylvester matrix of two polynomials given as coefficient lists.

    The entries are whatever the lists hold (numbers or X-polynomials as
    lists); the coefficient of ``Y**i`` sits in column ``m + n - 1 - i``.
    """
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = [] if a and isinstance(a[0], list) else 0
    rows = []
    for r in range(n):
        row = [zero] * size
        for i in range(m + 1):
            row[r + m - i] = a[i]
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for i in range(n + 1):
            row[r + n - i] = b[i]
        rows.append(row)
    return rows


def res_y_lists(a, b):
    """Resultant in Y of two integer polynomials in Y-major list form."""
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        return []
    if m == 0 and n == 0:
        return [1]
    if n == 0:
        return dense.power(b[0], m)
    if m == 0:
        return dense.power(a[0], n)
    return dense.det_bareiss(sylvester_matrix(a, b))


def subresultant_matrix(a, b, j, column_power):
    """Square matrix whose determinant is the Y^column_power coefficient of
    the ``j``-th subresultant of ``a`` and ``b``."""
    m, n = len(a) - 1, len(b) - 1
    width = m + n - j
    zero = [] if a and isinstance(a[0], list) else 0
    rows = []
    for r in range(n - j):
        row = [zero] * width
        for i in range(m + 1):
            row[r + m - i] = a[i]
        rows.append(row)
    for r in range(m - j):
        row = [zero] * width
        for i in range(n + 1):
            row[r + n - i] = b[i]
        rows.append(row)
    size = m + n - 2 * j
    col = width - 1 - column_power
    return [row[:size - 1] + [row[col]] for row in rows]


def subresultant_coeff(a, b, j, i):
    """Coefficient of ``Y**i`` in the ``j``-th subresultant (integer lists)."""
    m, n = len(a) - 1, len(b) - 1
    if j == 0 and i == 0:
        return res_y_lists(a, b)
    if not (0 <= i <= j <= min(m, n)) or j == max(m, n):
        raise ValueError("subresultant index out of range")
    return dense.det_bareiss(subresultant_matrix(a, b, j, i))


def sylvester_resultant(A, B, eliminate="y"):
    """Determinant of the Sylvester matrix of ``A`` and ``B`` in one variable.

    Returns a :class:`UniPoly` in the variable that is kept.  Computed by
    fraction-free Bareiss elimination over Z[kept variable] after clearing
    denominators.
    """
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    if eliminate == "x":
        A, B = A.swap(), B.swap()
    m, n = A.deg_y, B.deg_y
    if m <= 0 and n <= 0:
        raise BothConstantInAxis(f"neither polynomial involves {eliminate.upper()}")
    if A.is_zero() or B.is_zero():
        return UniPoly()
    La, a = _int_y_coeffs(A)
    Lb, b = _int_y_coeffs(B)
    r = res_y_lists(a, b)
    scale = La**n * Lb**m
    if scale != 1:
        r = [dense.qdiv(c, scale) for c in r]
    return UniPoly._raw(r)


# ---------------------------------------------------------------------------
# bivariate gcd machinery over Q[X][Y]


def _ycontent(cols):
    g = []
    for c in cols:
        if c:
            g = dense.zgcd(g, c) if g else dense.primitive(c)
            if len(g) == 1:
                return [1]
    return g


def _ydiv_content(cols, g):
    if g == [1]:
        return [list(c) for c in cols]
    return [dense.exact_div(c, g) if c else [] for c in cols]


def _yprem(a, b):
    """Pseudo-remainder in Y of Y-major lists with coefficients in Z[X]."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return [list(c) for c in a]
    lb = b[-1]
    r = [list(c) for c in a]
    for k in range(da - db, -1, -1):
        c = r[k + db]
        r = [dense.mul(x, lb) for x in r]
        if c:
            for i in range(db + 1):
                if b[i]:
                    r[k + i] = dense.sub(r[k + i], dense.mul(c, b[i]))
    r = r[:db]
    while r and not r[-1]:
        r.pop()
    return r


def _yprimitive(cols):
    cols = list(cols)
    while cols and not cols[-1]:
        cols.pop()
    if not cols:
        return []
    g = _ycontent(cols)
    cols = _ydiv_content(cols, g)
    lead = cols[-1][-1]
    if lead < 0:
        cols = [dense.neg(c) for c in cols]
    return cols


def _as_int_cols(P):
    return P.to_int()[1].y_coeffs()


def _ygcd_cols(a, b):
    """gcd of two Y-major integer polynomials, primitive in Z[X][Y]."""
    ca, cb = _ycontent(a), _ycontent(b)
    if not a:
        return _yprimitive(b)
    if not b:
        return _yprimitive(a)
    c = dense.zgcd(ca, cb)
    pa, pb = _yprimitive(a), _yprimitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = _yprem(pa, pb)
        pa, pb = pb, _yprimitive(r)
    if pb:
        g = [[1]]          # pseudo-remainder sequence ended in a nonzero constant
    else:
        g = pa
    return [dense.mul(col, c) for col in g]


def bi_gcd(A, B):
    """Primitive integer gcd of two bivariate polynomials over the rationals."""
    if A.is_zero() and B.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    cols = _ygcd_cols(_as_int_cols(A), _as_int_cols(B))
    return DenseBiPoly.from_y_coeffs(cols).primitive()


def bi_content(P):
    """Content with respect to Y, as a primitive integer polynomial in X."""
    return UniPoly._raw(_ycontent(_as_int_cols(P)))


def bi_div(A, B):
    """Exact quotient ``A / B`` in Q[X, Y]; raises ArithmeticError if inexact."""
    if B.is_zero():
        raise ZeroDivisionError("bivariate division by zero")
    a = A.y_coeffs()
    b = B.y_coeffs()
    db = len(b) - 1
    if len(a) - 1 < db:
        if A.is_zero():
            return A
        raise ArithmeticError("inexact bivariate division")
    lb = b[-1]
    r = [list(c) for c in a]
    q = [[] for _ in range(len(a) - db)]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c:
            qk, rem = dense.divmod_q(c, lb)
            if rem:
                raise ArithmeticError("inexact bivariate division")
            q[k] = qk
            for i in range(db + 1):
                if b[i]:
                    r[k + i] = dense.sub(r[k + i], dense.mul(qk, b[i]))
    if any(r):
        raise ArithmeticError("inexact bivariate division")
    return DenseBiPoly.from_y_coeffs(q)


def bi_squarefree(P):
    """Primitive integer polynomial with the same complex zero set as ``P``,
    free of repeated factors."""
    if P.is_zero():
        raise ZeroInput("squarefree part of the zero polynomial")
    cols = _as_int_cols(P)
    c = _ycontent(cols)
    prim = _ydiv_content(cols, c)
    c_sf = dense.squarefree(c) if len(c) > 1 else [1]
    if len(prim) > 1:
        dprim = [dense.scale(col, j) for j, col in enumerate(prim)][1:]
        g = _ygcd_cols(prim, dprim)
        pp = DenseBiPoly.from_y_coeffs(prim)
        if len(g) > 1:
            pp = bi_div(pp, DenseBiPoly.from_y_coeffs(g))
    else:
        pp = DenseBiPoly.constant(1)
    return (pp * DenseBiPoly.from_y_coeffs([c_sf])).primitive()


def bivariate_common_factor(F, G):
    """True iff ``F`` and ``G`` share a factor of positive degree.

    A common factor involving Y makes Res_Y(F, G) vanish identically; one in
    X alone shows up in the gcd of the Y-contents.
    """
    if F.is_zero() or G.is_zero():
        raise ZeroInput("common factor test needs nonzero polynomials")
    if F.deg_y >= 1 and G.deg_y >= 1:
        if sylvester_resultant(F, G, "y").is_zero():
            return True
    cf, cg = bi_content(F), bi_content(G)
    return len(dense.zgcd(list(cf.coeffs), list(cg.coeffs))) > 1


# ---------------------------------------------------------------------------
# text format


def parse_terms(text):
    """Parse the ``<coeff> <alpha> <beta>`` line format into term triples."""
    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<coeff> <alpha> <beta>', got {raw!r}", lineno)
        try:
            coeff = dense.norm(Fraction(parts[0]))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient {parts[0]!r}", lineno) from None
        if "." in parts[0] or "e" in parts[0].lower():
            raise ParseError(f"coefficient {parts[0]!r} must be an integer or p/q", lineno)
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad exponent in {raw!r}", lineno) from None
        if not (0 <= a <= MAX_EXPONENT and 0 <= b <= MAX_EXPONENT):
            raise ParseError(f"exponent out of range in {raw!r}", lineno)
        terms.append((coeff, a, b))
    return terms


def parse_sparse(text):
    return SparseBiPoly(parse_terms(text))


def parse_dense(text, budget=DEFAULT_BUDGET):
    return SparseBiPoly(parse_terms(text)).to_dense(budget)


def format_terms(P):
    terms = P.terms() if isinstance(P, DenseBiPoly) else P.terms
    return "".join(f"{_format_coeff(c)} {a} {b}\n" for c, a, b in terms)
