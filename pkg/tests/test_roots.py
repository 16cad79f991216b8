from fractions import Fraction

from hypothesis import assume, given, strategies as st
import pytest

from sparsecurve.errors import ZeroInput
from sparsecurve.poly import UniPoly
from sparsecurve.roots import (IsolatingInterval, count_roots_in, descartes_positive_bound,
                               isolate_roots, refine, sparse_real_bound, sparse_sign,
                               sparse_sign_changes, sturm_chain)

from conftest import uni_polys

x = UniPoly.x()


@pytest.mark.parametrize("P, expected", [
    (x**2 - 1, 1), (x**3 - x**2 + 1, 2), (x**2 + 1, 0),
])
def test_descartes_examples(P, expected):
    assert descartes_positive_bound(P) == expected


def test_descartes_sparse_sequence():
    assert descartes_positive_bound([(1, 10**9), (-3, 5), (2, 0)]) == 2
    with pytest.raises(ZeroInput):
        descartes_positive_bound(UniPoly())


@pytest.mark.parametrize("t, expected", [(1, 1), (2, 3), (5, 9)])
def test_sparse_real_bound(t, expected):
    assert sparse_real_bound(t) == expected


@pytest.mark.parametrize("P, lo, hi, expected", [
    (x**2 - 2, None, None, 2), (x**2 + 1, None, None, 0), (x**2 - 2, 0, None, 1),
    (x**2 - 1, -1, 1, 1),          # half-open: 1 counted, -1 not
    (x**2 - 1, 1, 3, 0),
])
def test_count_roots(P, lo, hi, expected):
    assert count_roots_in(P, lo, hi) == expected


def test_sturm_chain_shape():
    seq = [list(getattr(p, "coeffs", p)) for p in sturm_chain((x - 1)**2 * (x + 2)).sequence]
    assert len(seq[-1]) == 1 and seq[-1][0] != 0


def test_isolate_examples():
    r = isolate_roots(x**2 - 2)
    assert len(r) == 2 and not r[0].is_exact
    assert r[0].lo < -Fraction(1414, 1000) < r[0].hi and r[1].lo < Fraction(1414, 1000) < r[1].hi
    assert isolate_roots(x - 3) == [IsolatingInterval.point(3)]
    assert isolate_roots(x**2 + 1) == []


def test_refine_examples():
    iv = refine(IsolatingInterval.open(1, 2), x**2 - 2, Fraction(1, 4))
    assert iv.width <= Fraction(1, 4) and iv.lo**2 < 2 < iv.hi**2
    assert refine(IsolatingInterval.point(3), x - 3, Fraction(1, 100)) == IsolatingInterval.point(3)
    iv = refine(IsolatingInterval.open(-2, -1), x**2 - 2, Fraction(1, 2))
    assert iv.width <= Fraction(1, 2) and -2 <= iv.lo and iv.hi <= -1 and iv.lo**2 > 2 > iv.hi**2


def test_refine_lands_on_rational_root():
    iv = refine(IsolatingInterval.open(0, 4), x**2 - 1, Fraction(1, 1000))
    assert 1 in iv


@st.composite
def constructed(draw):
    roots = draw(st.lists(st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4)),
                          min_size=0, max_size=5, unique=True))
    P = UniPoly([1])
    for r in roots:
        P = P * (x - r) ** draw(st.integers(1, 2))
    # factors without real roots
    for _ in range(draw(st.integers(0, 1))):
        P = P * (x**2 + draw(st.integers(1, 5)))
    assume(P.degree <= 8)
    return P, sorted(roots)


@given(constructed(), st.builds(Fraction, st.integers(-40, 40), st.integers(1, 3)),
       st.builds(Fraction, st.integers(-40, 40), st.integers(1, 3)))
def test_sturm_matches_construction(case, a, b):
    P, roots = case
    assume(P.degree >= 1)
    assert count_roots_in(P) == len(roots)
    lo, hi = min(a, b), max(a, b)
    assert count_roots_in(P, lo, hi) == sum(1 for r in roots if lo < r <= hi)


@given(constructed())
def test_isolation_matches_roots(case):
    P, roots = case
    assume(P.degree >= 1)
    ivs = isolate_roots(P)
    assert len(ivs) == count_roots_in(P) == len(roots)
    for iv, r in zip(ivs, roots):
        assert r in iv
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo


@given(uni_polys(8))
def test_descartes_sound(P):
    assume(P.degree >= 1)
    assert descartes_positive_bound(P) >= count_roots_in(P, 0, None)


@given(uni_polys(8))
def test_isolation_count(P):
    assume(P.degree >= 1)
    ivs = isolate_roots(P)
    assert len(ivs) == count_roots_in(P)
    for iv in ivs:
        if iv.is_exact:
            assert P(iv.lo) == 0
        else:
            assert count_roots_in(P, iv.lo, iv.hi) == 1 and P(iv.hi) != 0


sparse_terms = st.lists(st.tuples(st.integers(-9, 9).filter(bool), st.integers(0, 40)),
                        min_size=1, max_size=5, unique_by=lambda t: t[1])


@given(sparse_terms)
def test_sparse_bound_exact_count(terms):
    P = UniPoly([0] * 41)
    for c, e in terms:
        P = P + c * x**e
    assume(P.degree >= 1)
    assert count_roots_in(P) <= sparse_real_bound(len(terms))


@given(st.lists(st.tuples(st.integers(-9, 9).filter(bool), st.integers(0, 2**31 - 1)),
                min_size=1, max_size=4, unique_by=lambda t: t[1]))
def test_sparse_bound_huge_exponents(terms):
    pts = [Fraction(k, 4) for k in range(-12, 13)] + [Fraction(1) + Fraction(1, 10**6), Fraction(-1) - Fraction(1, 10**6)]
    pts = sorted(set(pts))
    assert sparse_sign_changes(terms, pts) <= sparse_real_bound(len(terms))


@pytest.mark.parametrize("terms, xv", [
    ([(1, 300_000), (-1, 299_999)], Fraction(3, 2)),
    ([(1, 300_000), (-1, 299_999)], Fraction(-3, 2)),
    ([(2, 250_001), (-7, 3), (1, 0)], Fraction(-9, 10)),
    ([(5, 400_000), (-3, 400_001)], Fraction(5, 3)),     # exactly zero
    ([(5, 10**6), (-3, 10**6 + 1), (1, 7)], Fraction(5, 3)),
    ([(3, 2**31 - 1), (-3, 2**31 - 3)], Fraction(-1)),
])
def test_sparse_sign_log_domain_matches_exact(terms, xv):
    exact = sum(Fraction(c) * xv**e for c, e in terms)
    assert sparse_sign(terms, xv) == (exact > 0) - (exact < 0)
