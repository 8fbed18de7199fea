from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from clpoly.poly import ParseError, Poly, parse_rational, parse_rational_list, poly_gcd, to_fraction

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, min_size=1, max_size=7).map(Poly)


def test_parse_forms():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-0.125") == Fraction(-1, 8)
    assert parse_rational(" 7 ") == 7
    assert parse_rational_list("1, -3/2, 0.25") == [1, Fraction(-3, 2), Fraction(1, 4)]


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_rational_list("1,2,abc")
    assert exc.value.position == 4
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_basic_structure():
    p = Poly([1, 1, 1])
    assert p.degree == 2 and p.lc == 1
    assert Poly([1, 0, 0]).degree == 0
    assert Poly().degree == -1 and Poly().is_zero()
    assert p.to_string("z") == "z^2 + z + 1"
    assert p(2) == 7
    assert p.eval_complex(Fraction(-1, 2), Fraction(0)) == (Fraction(3, 4), 0)


def test_shift_and_compose():
    p = Poly([0, 1, 1])
    assert p.shift(Fraction(-1, 2)) == Poly([Fraction(-1, 4), 0, 1])
    assert Poly([0, 1]).compose(p) == p


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_gcd_divides(a, b):
    if a.is_zero() or b.is_zero():
        return
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()


def test_gcd_common_factor():
    a = Poly.from_roots([1, 2, Fraction(1, 3)])
    b = Poly.from_roots([2, Fraction(1, 3), 5])
    assert poly_gcd(a, b) == Poly.from_roots([2, Fraction(1, 3)])
