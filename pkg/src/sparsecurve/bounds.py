"""Closed-form bounds on the number of real solutions.

Integer-valued bounds are exact Python integers; bounds with fractional
parts are :class:`~fractions.Fraction` values, rounded up only at the end.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .poly import dense

# certified rational upper bound for e**2 = 7.389056...
E_SQUARED_UPPER = Fraction(739, 100)


def _ceil(q):
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def _check_positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be at least 1")


def khovanskii(l, n):
    """``2**C(l+n, 2) * (n+1)**(l+n)`` for ``n`` polynomials with ``l + n + 1`` monomials."""
    if l < 0:
        raise ValueError("l must be non-negative")
    _check_positive(n=n)
    return 2 ** comb(l + n, 2) * (n + 1) ** (l + n)


def bihan_sottile(l, n, e_squared=E_SQUARED_UPPER):
    """``(e**2 + 3)/4 * 2**C(l, 2) * n**l`` using an upper bound for ``e**2``."""
    if l < 0:
        raise ValueError("l must be non-negative")
    _check_positive(n=n)
    return (Fraction(e_squared) + 3) / 4 * 2 ** comb(l, 2) * n ** l


def khovanskii_parameters(d, t, n=2):
    """``(l, n)`` for one dense degree-``d`` equation and one ``t``-term one.

    The dense polynomial may use all ``C(d+2, 2)`` monomials, so the system
    has at most ``C(d+2, 2) + t`` distinct exponent vectors and
    ``l = monomials - n - 1``.
    """
    _check_positive(d=d, t=t)
    return comb(d + 2, 2) + t - n - 1, n


def lrw_trinomial(t):
    """``2**t - 2`` for a trinomial against a ``t``-nomial."""
    _check_positive(t=t)
    return 2 ** t - 2


def avendano(t):
    """``6t - 4`` for a line against a ``t``-nomial."""
    _check_positive(t=t)
    return 6 * t - 4


def lrw_general(n, t):
    """``n + n**2 + ... + n**(t-1)``."""
    _check_positive(n=n, t=t)
    return sum(n ** k for k in range(1, t))


def bezout(degrees):
    if not degrees:
        raise ValueError("need at least one degree")
    for d in degrees:
        _check_positive(degree=d)
    return prod(degrees)


def optm(d, n):
    """``d * (2d - 1)**(n - 1)``."""
    _check_positive(d=d, n=n)
    return d * (2 * d - 1) ** (n - 1)


def real_bezout(d, delta):
    """``d**2/4 + d*delta`` (kept exact)."""
    _check_positive(d=d, delta=delta)
    return dense.norm(Fraction(d * d, 4) + d * delta)


def zero_f_bound(d):
    _check_positive(d=d)
    return d * d


def sparse_univariate_bound(t):
    """Distinct real roots of a univariate polynomial with ``t`` terms."""
    _check_positive(t=t)
    return 2 * t - 1


def vertical_case_bound(d, t):
    """Solutions when ``F`` does not involve ``Y``: ``2td - d``."""
    _check_positive(d=d, t=t)
    return 2 * t * d - d


def off_interval_bound(d):
    """Solutions lying over the critical abscissae: ``2d**3 - d**2``."""
    _check_positive(d=d)
    return 2 * d ** 3 - d ** 2


def interval_count_bound(d):
    return 2 * d * d - d + 1


def resultant_degree_bound(d):
    return 2 * d * d - d


def paper_bound_terms(d, t):
    """The summands of the assembled bound, kept exact."""
    _check_positive(d=d, t=t)
    d_, t_ = Fraction(d), t
    return {
        "branch_terms": (2 * d_ * d_ - d_ + 1) * d_ * (t_ - 1),
        "vertical_terms": 2 * d_ * t_,
        "axis_terms": 2 * t_ * d_ * d_,
        "wronskian_terms": sum(2 * (d_ * d_ / 4 + 2 * (1 + 2 * d_) * comb(s, 2) * d_)
                               for s in range(1, t + 1)),
        "off_interval": Fraction(off_interval_bound(d)),
    }


def paper_bound_irreducible(d, t):
    """Explicit bound for an irreducible degree-``d`` curve and a ``t``-sparse one."""
    _check_positive(d=d, t=t)
    return _ceil(sum(paper_bound_terms(d, t).values()))


def paper_bound_general(d, t):
    """Bound for arbitrary ``F`` of degree ``d``: adds ``ceil(d**2/4)`` for
    isolated points shared by factors."""
    _check_positive(d=d, t=t)
    return paper_bound_irreducible(d, t) + _ceil(Fraction(d * d, 4))


def asymptotic_form(d, t):
    """``2 d**3 t + 4 d**2 t**3``."""
    return 2 * d ** 3 * t + 4 * d ** 2 * t ** 3


def component_bound(d):
    """Connected components of the real zero set of a degree-``d`` curve."""
    return optm(d, 2)


@dataclass(frozen=True)
class BoundTable:
    d: int
    t: int
    khovanskii: int
    bihan_sottile: Fraction
    lrw_trinomial: int
    lrw_general: int
    avendano: int
    optm: int
    bezout: int
    real_bezout: Fraction
    paper_irreducible: int
    paper_general: int

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def bound_table(d, t, g_degree=None):
    """All bounds for one ``(d, t)`` pair.

    ``g_degree`` is the total degree of the sparse polynomial when known
    (used by Bezout and the real Bezout bound); it defaults to ``d``.
    """
    _check_positive(d=d, t=t)
    e = d if g_degree is None else max(1, g_degree)
    l, n = khovanskii_parameters(d, t)
    return BoundTable(
        d=d, t=t,
        khovanskii=khovanskii(l, n),
        bihan_sottile=bihan_sottile(l, n),
        lrw_trinomial=lrw_trinomial(t),
        lrw_general=lrw_general(2, t),
        avendano=avendano(t),
        optm=optm(d, 2),
        bezout=bezout([d, e]),
        real_bezout=real_bezout(d, e),
        paper_irreducible=paper_bound_irreducible(d, t),
        paper_general=paper_bound_general(d, t),
    )
