"""Exact arithmetic layers: rational polynomials in one symbol, cyclotomic
numbers, rational functions, and specialization at roots of unity."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlvir.exactnum import (GENERIC, QQ, Cyclotomic, PoleError, RatFunc,
                            RhoSpec, UniPoly, cyclotomic_field,
                            cyclotomic_poly, euler_phi,
                            specialize_at_rational, specialize_at_root)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def cyclo_elems(order):
    dim = euler_phi(order)
    return st.lists(fractions, min_size=dim, max_size=dim).map(
        lambda cs: Cyclotomic.make(order, cs))


unipolys = st.lists(fractions, min_size=1, max_size=5).map(UniPoly.from_fractions)


# -- euler phi and cyclotomic polynomials

def test_euler_phi_small_values():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_poly_known_cases():
    assert cyclotomic_poly(1) == UniPoly.from_ints([-1, 1])
    assert cyclotomic_poly(2) == UniPoly.from_ints([1, 1])
    assert cyclotomic_poly(4) == UniPoly.from_ints([1, 0, 1])
    assert cyclotomic_poly(6) == UniPoly.from_ints([1, -1, 1])
    assert cyclotomic_poly(12) == UniPoly.from_ints([1, 0, -1, 0, 1])


@pytest.mark.parametrize("n", range(2, 13))
def test_primitive_root_kills_its_cyclotomic_polynomial(n):
    xi = Cyclotomic.generator(n)
    p = cyclotomic_poly(n)
    val = Cyclotomic.constant(n, 0)
    for i, c in enumerate(p.coefficients):
        val = val + (xi ** i) * c
    assert not val
    assert xi ** n == Cyclotomic.constant(n, 1)
    # primitivity: no smaller power is 1
    for k in range(1, n):
        assert xi ** k != Cyclotomic.constant(n, 1)


# -- univariate polynomial arithmetic

@given(unipolys, unipolys)
def test_unipoly_divmod_is_exact(a, b):
    if not b:
        return
    q, r = divmod(a, b)
    assert b * q + r == a
    assert r.degree < b.degree or not r


@given(unipolys, unipolys)
def test_unipoly_gcd_divides_both(a, b):
    g = a.gcd(b)
    if not g:
        assert not a and not b
        return
    assert not a % g
    assert not b % g


@given(unipolys)
def test_unipoly_text_round_trip(p):
    assert UniPoly.parse(p.to_text()) == p


# -- cyclotomic field axioms

@given(cyclo_elems(5), cyclo_elems(5), cyclo_elems(5))
def test_cyclotomic_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(cyclo_elems(4))
def test_cyclotomic_inverse(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    one = Cyclotomic.constant(4, 1)
    assert a * a.inverse() == one
    assert (one / a) * a == one


@given(cyclo_elems(3))
def test_cyclotomic_text_round_trip(a):
    assert Cyclotomic.parse(3, a.to_text()) == a


def test_cyclotomic_rational_detection():
    # z + z^2 = -1 in the third cyclotomic field
    z = Cyclotomic.generator(3)
    v = z + z * z
    assert v.is_rational() and v.rational_value() == -1


# -- rational functions and specialization

def _rf(num_text, den_text):
    return RatFunc.make(UniPoly.parse(num_text), UniPoly.parse(den_text))


def test_specialize_common_factor_cancels():
    f = _rf("1 - ρ^2", "1 - ρ^4")
    assert specialize_at_root(f, 2) == Cyclotomic.constant(2, Fraction(1, 2))


def test_specialize_vanishing_numerator():
    f = _rf("1 - ρ^3", "1 - ρ")
    assert not specialize_at_root(f, 3)


def test_specialize_at_rational_values():
    assert specialize_at_rational(_rf("ρ", "1 - ρ"), 0) == 0
    assert specialize_at_rational(_rf("ρ - 1", "1 - ρ^2"), 0) == -1
    assert specialize_at_rational(_rf("1 - ρ^2", "1 - ρ"), 1) == 2


def test_specialize_pole_raises():
    with pytest.raises(PoleError):
        specialize_at_rational(_rf("ρ - 1", "1 - ρ^2"), -1)
    with pytest.raises(PoleError):
        specialize_at_root(_rf("1", "1 + ρ"), 2)


@given(st.lists(fractions, min_size=1, max_size=4),
       st.lists(fractions, min_size=1, max_size=4))
def test_ratfunc_field_operations(ns, ds):
    a = RatFunc.from_poly(UniPoly.from_fractions(ns))
    b = RatFunc.from_poly(UniPoly.from_fractions(ds))
    if b:
        assert (a / b) * b == a
    assert a - a == RatFunc.constant(0)
    assert a + b == b + a


@given(st.lists(fractions, min_size=1, max_size=4))
def test_ratfunc_text_round_trip(ns):
    a = RatFunc.from_poly(UniPoly.from_fractions(ns))
    assert RatFunc.parse(a.to_text()) == a


# -- specialization plumbing

def test_rho_spec_parsing():
    assert RhoSpec.parse("generic") == RhoSpec.generic()
    assert RhoSpec.parse("xi:3") == RhoSpec.root(3)
    assert RhoSpec.parse("0") == RhoSpec.rational(0)
    assert RhoSpec.parse("-1") == RhoSpec.rational(-1)
    assert RhoSpec.parse("2/3") == RhoSpec.rational(Fraction(2, 3))
    for text in ("generic", "xi:5", "0", "-1", "2/3"):
        assert RhoSpec.parse(text).to_text() == text


def test_rho_spec_rejects_bad_input():
    with pytest.raises(ValueError):
        RhoSpec.parse("xi:1")
    with pytest.raises(ValueError):
        RhoSpec.parse("pi")


def test_one_minus_rho_pow():
    assert not RhoSpec.root(2).one_minus_rho_pow(2)
    assert RhoSpec.root(2).one_minus_rho_pow(1) == cyclotomic_field(2).from_fraction(2)
    generic = RhoSpec.generic().one_minus_rho_pow(1)
    assert generic == RatFunc.from_poly(UniPoly.parse("1 - ρ"))
    assert RhoSpec.rational(0).one_minus_rho_pow(7) == 1


def test_field_tags_are_singletons():
    assert cyclotomic_field(3) is cyclotomic_field(3)
    assert RhoSpec.root(4).field is cyclotomic_field(4)
    assert RhoSpec.rational(0).field is QQ
    assert RhoSpec.generic().field is GENERIC


def test_field_value_text():
    k = cyclotomic_field(4)
    assert k.value_text(k.from_fraction(Fraction(-1, 2))) == "-1/2"
    z = Cyclotomic.generator(4)
    assert k.value_text(k.from_fraction(Fraction(1, 2)) + z) == "1/2 + 1*z"
