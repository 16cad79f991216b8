from fractions import Fraction

from hypothesis import assume, given, strategies as st

from sparsecurve import dense
from sparsecurve.algebraic import (RealAlgebraic, fiber_common_real_roots, fiber_count,
                                   fiber_isolate, fiber_of)
from sparsecurve.roots import IsolatingInterval

from conftest import X, Y, rationals


def sqrt2():
    return RealAlgebraic([-2, 0, 1], IsolatingInterval.open(1, 2))


def test_basic_signs():
    a = sqrt2()
    assert a.sign([-2, 0, 1]) == 0
    assert a.sign([-1, 1]) == 1
    assert a.compare(Fraction(3, 2)) == -1
    assert a.compare(Fraction(7, 5)) == 1


def test_split_on_gcd():
    # root of (x^2 - 2)(x^2 - 3) inside (1, 3/2) is sqrt 2
    poly = dense.mul([-2, 0, 1], [-3, 0, 1])
    a = RealAlgebraic(poly, IsolatingInterval.open(1, Fraction(3, 2)))
    assert a.is_zero([-2, 0, 1])
    assert a.poly == [-2, 0, 1]
    b = RealAlgebraic(poly, IsolatingInterval.open(Fraction(3, 2), 2))
    assert not b.is_zero([-2, 0, 1])
    assert b.poly == [-3, 0, 1]


def test_compare_across_defining_polynomials():
    a = sqrt2()
    b = RealAlgebraic(dense.mul([-2, 0, 1], [-5, 1]), IsolatingInterval.open(0, 3))
    assert a.compare(b) == 0 and b.compare(a) == 0
    c = RealAlgebraic([-3, 0, 1], IsolatingInterval.open(1, 2))
    assert a.compare(c) == -1 and c.compare(a) == 1


def test_rational_roots_become_exact():
    roots = RealAlgebraic.roots_of(dense.mul([-1, 0, 1], [-2, 0, 1]))
    assert len(roots) == 4
    vals = []
    for r in roots:
        r.is_zero([-1, 0, 1])
        vals.append(r.value if r.is_rational else None)
    assert vals == [None, -1, 1, None]


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_sign_at_sqrt2_matches_norm(a):
    # a(sqrt 2) = u + v sqrt 2; its sign follows from u and v exactly
    r = dense.rem_q(dense.strip(list(a)), [-2, 0, 1]) if dense.strip(list(a)) else []
    u = Fraction(r[0]) if len(r) > 0 else Fraction(0)
    v = Fraction(r[1]) if len(r) > 1 else Fraction(0)
    if v == 0:
        expected = (u > 0) - (u < 0)
    elif u == 0 or (u > 0) == (v > 0):
        expected = 1 if (u + v) > 0 or (u == 0 and v > 0) else -1
    else:
        dom = (u * u > 2 * v * v) - (u * u < 2 * v * v)
        expected = dom * (1 if u > 0 else -1)
    assert sqrt2().sign(a) == expected


@given(rationals, st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_sign_at_hidden_rational(r, a):
    # r hidden among irrational roots of a larger defining polynomial
    poly = dense.mul(dense.mul([-r.numerator, r.denominator], [-3, 0, 1]), [-7, 0, 0, 1])
    hits = [x for x in RealAlgebraic.roots_of(dense.to_int(poly)[1]) if x.compare(r) == 0]
    assert len(hits) == 1
    v = dense.evaluate(dense.strip(list(a)), r) if dense.strip(list(a)) else 0
    assert hits[0].sign(a) == (v > 0) - (v < 0)


@given(rationals, rationals)
def test_compare_is_antisymmetric(p, q):
    assume(p != q)
    P = dense.to_int(dense.mul(dense.mul([-p, 1], [-q, 1]), [-5, 0, 1]))[1]
    xs = RealAlgebraic.roots_of(P)
    ys = RealAlgebraic.roots_of(P)
    for i, a in enumerate(xs):
        for j, b in enumerate(ys):
            c = a.compare(b)
            assert c == (i > j) - (i < j)


def test_fiber_counts_over_sqrt2():
    a = sqrt2()
    assert fiber_common_real_roots([Y**2 - X**2, Y - X], a) == 1
    assert fiber_common_real_roots([Y**2 - 2, Y**2 - X**2], sqrt2()) == 2
    assert fiber_common_real_roots([Y**2 - X**2 * Y, Y - X], sqrt2()) == 0
    assert fiber_common_real_roots([Y**2 - X * Y, Y - X], sqrt2()) == 1
    assert fiber_common_real_roots([X**2 - 2, 2 * X**2 - 4], sqrt2()) is None
    assert fiber_common_real_roots([Y**2 + X, Y - X], sqrt2()) == 0


def test_fiber_isolation():
    a = RealAlgebraic.rational(2)
    ivs = fiber_isolate(fiber_of(Y**2 - 2 * X + Y, a), a)
    # y^2 + y - 4: roots (-1 -+ sqrt 17) / 2
    assert len(ivs) == 2
    assert ivs[0][0] < Fraction(-256, 100) < ivs[0][1] and ivs[1][0] < Fraction(156, 100) < ivs[1][1]
    (l1, h1), (l2, h2) = fiber_isolate(fiber_of((Y - 3) * (Y + X), a), a)
    assert (l1 < -2 < h1 or l1 == h1 == -2) and (l2 < 3 < h2 or l2 == h2 == 3)
    # y^2 - x at sqrt 2 has roots +-2^(1/4)
    b = sqrt2()
    p = fiber_of(Y**2 - X, b)
    ivs = fiber_isolate(p, b)
    assert len(ivs) == 2 and fiber_count(p, b) == 2
    for lo, hi in ivs:
        assert lo**4 < 2 < hi**4 or hi**4 < 2 < lo**4
