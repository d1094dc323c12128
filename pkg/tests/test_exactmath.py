from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetamass.exactmath import (
    HPNumber,
    RationalFunction,
    UniPoly,
    digits_to_bits,
    gamma_r,
    make_context,
    poly_roots_numeric,
    rf_normalize,
    rf_residue_simple,
    rf_substitute_inv,
)

T = UniPoly([0, 1])
ONE = UniPoly([1])

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fracs, min_size=0, max_size=5).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_normalize_cancels_common_factor():
    f = rf_normalize(UniPoly([2, 2]), UniPoly([0, 2, 2]))
    assert f.num == UniPoly([1]) and f.den == UniPoly([0, 1])


def test_normalize_monic_denominator():
    den = UniPoly([1, -1]) * UniPoly([1, -2])
    f = rf_normalize(UniPoly([1, 0, 2]), den)
    assert f.den == UniPoly([Fraction(1, 2), Fraction(-3, 2), 1])
    assert f.num == UniPoly([Fraction(1, 2), 0, 1])
    assert f(Fraction(1, 4)) == Fraction(3)  # P(1/4)/((3/4)(1/2))


def test_normalize_zero_numerator():
    f = rf_normalize(UniPoly([]), UniPoly([1, -1]))
    assert f.is_zero() and f.den == ONE


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        rf_normalize(ONE, UniPoly([]))


def test_substitute_inv_examples():
    f = RationalFunction(T)
    assert rf_substitute_inv(f, 4) == RationalFunction(ONE, UniPoly([0, 4]))
    g = RationalFunction(T, UniPoly([1, -1]) * UniPoly([1, -4]))
    assert rf_substitute_inv(g, 4) == g
    h = RationalFunction(UniPoly([1, 1]))
    assert rf_substitute_inv(rf_substitute_inv(h, 2), 2) == h
    with pytest.raises(ZeroDivisionError):
        rf_substitute_inv(h, 0)


def test_residue_examples():
    assert rf_residue_simple(RationalFunction(ONE, UniPoly([1, -1])), 1) == -1
    z = RationalFunction(UniPoly([1, 0, 2]), UniPoly([1, -1]) * UniPoly([1, -2]))
    assert rf_residue_simple(z, Fraction(1, 2)) == Fraction(-3, 2)
    with pytest.raises(ValueError, match="not a pole"):
        rf_residue_simple(RationalFunction(T, UniPoly([1, -1])), Fraction(1, 2))
    with pytest.raises(ValueError, match="pole not simple"):
        rf_residue_simple(RationalFunction(ONE, UniPoly([1, -1]) ** 2), 1)


def test_roots_examples():
    r = poly_roots_numeric(UniPoly([-1, 0, 1]))
    assert sorted(float(mpmath.re(x)) for x in r) == pytest.approx([-1, 1])
    r = poly_roots_numeric(UniPoly([1, 0, 2]))
    ctx = make_context(128)
    assert all(abs(abs(ctx.mpc(x)) - ctx.sqrt(ctx.mpf(1) / 2)) < 1e-30 for x in r)
    assert abs(poly_roots_numeric(UniPoly([-3, 1]))[0] - 3) < 1e-30
    with pytest.raises(ValueError):
        poly_roots_numeric(UniPoly([]))


def test_precision_floor():
    with pytest.raises(ValueError):
        make_context(32)
    assert digits_to_bits(50) >= 166


def test_gamma_r_values_and_poles():
    ctx = make_context(128)
    assert abs(gamma_r(1, ctx) - 1) < mpmath.mpf(2) ** -120
    assert abs(gamma_r(2, ctx) - 1 / ctx.pi) < mpmath.mpf(2) ** -120
    for z in (0, -2, Fraction(-4)):
        with pytest.raises(ZeroDivisionError, match="Gamma_R pole"):
            gamma_r(z, ctx)
    assert gamma_r(-1, ctx) == pytest.approx(-2 * float(ctx.pi))


def test_hpnumber_digits():
    ctx = make_context(200)
    h = HPNumber(ctx.pi, 200)
    assert h.digits(10) == "3.141592654"
    assert float(h) == pytest.approx(3.14159265)


def test_polynomial_rendering():
    assert str(UniPoly([1, 0, 2], "t")) == "1+2t^2"
    assert str(UniPoly([Fraction(1, 2), -1])) == "1/2-T"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == UniPoly([])


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, nonzero_polys, nonzero_polys)
def test_canonical_form_is_unique(a, b, c):
    f = RationalFunction(a * c, b * c)
    g = RationalFunction(a, b)
    assert f == g
    if not f.is_zero():
        assert f.den.lead == 1
        assert f.num.gcd(f.den).degree == 0


@settings(max_examples=50)
@given(polys, nonzero_polys, st.fractions(min_value=Fraction(1, 5), max_value=9, max_denominator=5))
def test_involution_is_an_involution(a, b, Q):
    f = RationalFunction(a, b)
    assert f.substitute_inv(Q).substitute_inv(Q) == f


@settings(max_examples=50)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_roots_reconstruct_polynomial(coeffs):
    p = UniPoly(coeffs)
    roots = poly_roots_numeric(p, 128)
    assert len(roots) == p.degree
    for r in roots:
        assert abs(p.eval_mp(make_context(128), r)) < 1e-20 * max(1, max(abs(c) for c in coeffs)) * max(1, abs(r)) ** p.degree
