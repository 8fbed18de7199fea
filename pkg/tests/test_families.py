from __future__ import annotations

from fractions import Fraction

import pytest

from clpoly.cl import cl_detect
from clpoly.errors import OutOfRange
from clpoly.families import (
    a_sr_root,
    bounds_row,
    d_squared_over_pi,
    degree2_check,
    degree10_family,
    omega_witness,
    p0_poly,
    prop36_order_check,
    simplex_sr_poly,
)
from clpoly.poly import Poly


def test_named_polynomials():
    assert p0_poly(1) == Poly([1, 2])
    assert p0_poly(2) == Poly([2, 2, 2])
    assert p0_poly(4) == Poly([24, 44, 46, 4, 2])
    assert simplex_sr_poly(1) == Poly([1, 2])
    assert simplex_sr_poly(2) == Poly([2, 3, 3]) / 2


def test_a_sr_degree_two_exact():
    # c = 2/3, so the imaginary part is sqrt(5/12)
    iv = a_sr_root(2).interval(Fraction(1, 10**20))
    assert iv.lo**2 <= Fraction(5, 12) <= iv.hi**2


@pytest.mark.parametrize("d,row", [
    (6, ("10.952", "6.811", "11.459", "33")),
    (30, ("285.956", "151.904", "286.479", "885")),
])
def test_bounds_rows(d, row):
    r = bounds_row(d).render(3)
    assert (r["alpha_tilde"], r["beta_sr"], r["d2_over_pi"], r["d_times_d_minus_half"]) == row
    assert bounds_row(d).consistent()


def test_pi_rendering():
    assert d_squared_over_pi(150, 3) == "7161.972"


def test_simplices_are_cl():
    assert all(cl_detect(simplex_sr_poly(d)) for d in range(1, 31))


@pytest.mark.parametrize("d", range(2, 10))
def test_order_chains(d):
    assert prop36_order_check(d).holds


def test_order_chain_breaks_at_ten():
    rep = prop36_order_check(10)
    assert not rep.holds


def test_degree10_family():
    assert degree10_family(1).exceeds_sr is False
    for m in (2, 14):
        rep = degree10_family(m)
        assert rep.is_cl and rep.diamond and rep.exceeds_sr


def test_omega_examples():
    w = omega_witness(2, Fraction(1, 2))
    assert w.c > 0 and w.vanishes
    w = omega_witness(3, 2)
    assert w.c == Fraction(7, 26) and w.diamond
    with pytest.raises(OutOfRange):
        omega_witness(3, 3)
    with pytest.raises(OutOfRange):
        omega_witness(2, 0)


def test_degree_two_formula():
    assert degree2_check([Fraction(k, 8) for k in range(49)])
