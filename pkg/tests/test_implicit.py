from fractions import Fraction
from math import comb, factorial

from hypothesis import assume, given, strategies as st
import pytest

from sparsecurve.errors import NotOnCurve, SingularFiber
from sparsecurve.implicit import (FormalPoly, _series_mul, PartitionSequence, branch_taylor,
                                  derivatives_from_taylor, enumerate_partitions,
                                  eval_phi_derivative, formal_numerator, implicit_numerator,
                                  partial_values, phi_derivatives, power_derivative,
                                  recursion_identity)
from sparsecurve.poly import UniPoly

from conftest import X, Y, dense_polys, rationals

x = UniPoly.x()


def partition_count(n, largest=None):
    """p(n) by the classic recursion on the largest part."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(partition_count(n - k, k) for k in range(1, min(n, largest) + 1))


def test_partition_examples():
    assert enumerate_partitions(1) == [PartitionSequence((1,))]
    got = {s.padded(3) for s in enumerate_partitions(3)}
    assert got == {(3, 0, 0), (1, 1, 0), (0, 0, 1)}
    assert len(enumerate_partitions(4)) == 5


@pytest.mark.parametrize("p", range(1, 11))
def test_partition_counts(p):
    seqs = enumerate_partitions(p)
    assert len(seqs) == partition_count(p)
    assert len(set(seqs)) == len(seqs)
    assert all(s.order == p for s in seqs)


def test_partition_sequence_helpers():
    s = PartitionSequence((1, 1, 0, 0))
    assert s.s == (1, 1) and s.size == 2 and s.order == 3 and s[5] == 0
    assert s.bump(3) == PartitionSequence((1, 1, 1))


def test_power_derivative_examples():
    e1 = power_derivative("a", 1)
    assert e1.terms == ((UniPoly([0, 1]), PartitionSequence((1,))),)
    e2 = power_derivative("a", 2)
    assert e2.coefficient((0, 1)) == UniPoly([0, 1])
    assert e2.coefficient((2,)) == UniPoly([0, -1, 1])
    assert len(e2.terms) == 2


@pytest.mark.parametrize("alpha", [2, 3, 4])
@pytest.mark.parametrize("p", range(1, 6))
def test_power_derivative_matches_direct(alpha, p):
    f = x**2 + 1
    direct = (f**alpha).derivative(p)
    derivs = [f.derivative(k) if k else f for k in range(p + 1)]
    exp = power_derivative("a", p)
    # both sides are polynomials of degree <= 2 alpha: agreement on more points is identity
    for k in range(-6, 7):
        pt = Fraction(k, 3)
        assert exp.evaluate(alpha, [d(pt) for d in derivs]) == direct(pt)


@given(st.integers(1, 6), st.integers(-3, 6), rationals)
def test_power_derivative_general_f(p, alpha, pt):
    # f = x^3 - 2x + 5 has no root in the sampled range, so negative alpha is safe
    f = x**3 - 2 * x + 5
    assume(f(pt) != 0)
    exp = power_derivative("a", p)
    derivs = [f.derivative(k) if k else f for k in range(p + 1)]
    vals = [d(pt) for d in derivs]
    if alpha >= 0:
        expected = (f**alpha).derivative(p)(pt)
    else:
        # Taylor series of 1/f raised to -alpha
        n = p
        fs = [f.derivative(k)(pt) / Fraction(factorial(k)) if k else f(pt)
              for k in range(n + 1)]
        inv = [Fraction(1) / fs[0]] + [Fraction(0)] * n
        for m in range(1, n + 1):
            inv[m] = -sum(fs[j] * inv[m - j] for j in range(1, m + 1)) / fs[0]
        g = [Fraction(1)] + [Fraction(0)] * n
        for _ in range(-alpha):
            g = _series_mul(g, inv, n)
        expected = g[p] * factorial(p)
    assert exp.evaluate(alpha, vals) == expected


def test_first_numerator():
    S1 = formal_numerator(1)
    assert S1 == -FormalPoly.var(("F", 1, 0))
    assert implicit_numerator(X**2 + Y**2 - 1, 1).denominator_exponent == 1


def test_second_numerator_closed_form():
    F = 3 * X**3 - X * Y**2 + 2 * Y**3 - X + 7
    S2 = implicit_numerator(F, 2).composed
    FX, FY = F.partial(1, 0), F.partial(0, 1)
    expected = (2 * FY * FX * F.partial(1, 1) - FY**2 * F.partial(2, 0)
                - F.partial(0, 2) * FX**2)
    assert S2 == expected


@pytest.mark.parametrize("F, k, pt, expected", [
    (X**2 + Y**2 - 1, 2, (0, 1), -1),
    (Y - X**3, 2, (1, 1), 6),
    (Y - X**2, 1, (1, 1), 2),
    (X**2 + Y**2 - 1, 1, (0, 1), 0),
    (X * Y - 1, 2, (1, 1), 2),
])
def test_derivative_examples(F, k, pt, expected):
    assert eval_phi_derivative(F, k, *pt) == expected


def test_point_errors():
    with pytest.raises(NotOnCurve):
        eval_phi_derivative(X**2 + Y**2 - 1, 1, 1, 1)
    with pytest.raises(SingularFiber):
        eval_phi_derivative(X**2 + Y**2 - 1, 1, 1, 0)


@pytest.mark.parametrize("k", range(1, 9))
def test_formal_degree_and_variables(k):
    S = formal_numerator(k)
    assert S.degree == 2 * k - 1
    allowed = {("F", a, b) for a in range(k + 1) for b in range(k + 1) if 1 <= a + b <= k}
    assert set(S.variables()) <= allowed
    assert len(allowed) == comb(k + 2, 2) - 1


@given(dense_polys(4, min_degree=1), st.integers(1, 5))
def test_composed_degree_certificate(F, k):
    assume(not F.is_zero())
    cert = implicit_numerator(F, k).certificates
    assert cert["formal_ok"] and cert["composed_ok"]
    assert cert["composed_degree"] <= (2 * k - 1) * F.degree


@st.composite
def curve_points(draw):
    F = draw(dense_polys(3, min_degree=1))
    x0, y0 = draw(rationals), draw(rationals)
    F = F - F.eval(x0, y0)
    assume(F.partial(0, 1).eval(x0, y0) != 0)
    return F, x0, y0


@given(curve_points())
def test_numerators_match_taylor_solution(case):
    F, x0, y0 = case
    n = 6
    assert phi_derivatives(F, x0, y0, n) == derivatives_from_taylor(branch_taylor(F, x0, y0, n))


@given(curve_points(), st.integers(1, 5))
def test_recursion_vanishes_on_curve(case, k):
    F, x0, y0 = case
    vals = partial_values(F, x0, y0, k)
    phis = phi_derivatives(F, x0, y0, k)
    vals.update({("phi", i): phis[i] for i in range(1, k + 1)})
    assert recursion_identity(k).evaluate(vals) == 0


def test_order_cap():
    with pytest.raises(ValueError):
        implicit_numerator(Y - X, 13)
