from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from clpoly.errors import NoPositiveRoot, NotCLClass, NotExpressible
from clpoly.hstar import hstar_from_poly
from clpoly.palindromic import (
    alpha_tilde_root,
    binom_basis,
    express_in_pal,
    extremal_a_root,
    pal_basis,
    restrict_to_cl,
)
from clpoly.poly import Poly
from clpoly.realroots import compare_sqrt


def test_basis_polynomials():
    assert binom_basis(0, 1) == Poly([1, 1])
    assert pal_basis(0, 1) == Poly([1, 2])
    assert pal_basis(0, 2) == Poly([2, 2, 2])
    assert pal_basis(1, 2) == Poly([0, 1, 1])
    assert pal_basis(0, 4) == Poly([24, 44, 46, 4, 2])


def test_express_matches_hstar():
    p = Poly([2, 3, 3]) / 2  # h* = (1, 1, 1)
    assert express_in_pal(p).coeffs == (1, 1)
    assert express_in_pal(Poly([2, 3, 3])).coeffs == (2, 2)
    q = Poly([1, 1, 1]) * Poly([2, 1, 1])
    coeffs = express_in_pal(q).coeffs
    assert list(coeffs) == list(hstar_from_poly(q).h[:3])
    assert express_in_pal(q).combine() == q


def test_not_expressible():
    with pytest.raises(NotExpressible):
        express_in_pal(Poly([0, 0, 1]))


def test_restriction():
    res = restrict_to_cl(Poly([1, 1, 1]))
    # p(-1/2 + ti) = 3/4 - t^2
    assert res.q == Poly([Fraction(-3, 4), 0, 1]) and res.unit == (-1, 0)
    assert res.reduced == Poly([Fraction(-3, 4), 1])
    with pytest.raises(NotCLClass):
        restrict_to_cl(Poly([0, 1, 0, 1]))


@pytest.mark.parametrize("d,expected", [(2, "0.866"), (3, "2.398"), (4, "4.603"), (10, "31.313")])
def test_alpha_tilde(d, expected):
    assert alpha_tilde_root(d).decimal(3) == expected


def test_alpha_tilde_degree_one():
    assert alpha_tilde_root(1).decimal(3) == "0.000"


def test_extremal_roots_decrease():
    for d in range(4, 11):
        vals = [extremal_a_root(i, d) for i in range(d // 2)]
        assert all(compare_sqrt(b, a) < 0 for a, b in zip(vals, vals[1:]))


def test_top_index_has_no_positive_root():
    for d in range(2, 26):
        with pytest.raises(NoPositiveRoot):
            extremal_a_root(d // 2, d)


def test_basis_identity_up_to_25():
    from clpoly.hstar import HStarVector, poly_from_hstar

    for d in range(0, 26):
        for i in range(d + 1):
            unit = [0] * (d + 1)
            unit[i] = 1
            # poly_from_hstar(e_i) = binom(z + d - i, d)
            assert poly_from_hstar(HStarVector.of(unit)) * factorial(d) == binom_basis(i, d)


def test_restriction_and_symmetry_up_to_25():
    mirror = Poly([-1, -1])
    for d in range(1, 26):
        for i in range(d // 2 + 1):
            p = pal_basis(i, d)
            restrict_to_cl(p)
            # z -> -1 - z maps b_i to (-1)^d b_(d-i)
            assert p.compose(mirror) == p * (-1) ** d


def test_monotone_up_to_20():
    for d in range(2, 21):
        vals = [extremal_a_root(i, d) for i in range(d // 2)]
        assert all(compare_sqrt(b, a) < 0 for a, b in zip(vals, vals[1:]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=Fraction(1, 4), max_value=25, max_denominator=6), max_size=5),
       st.sampled_from(["even", "odd"]))
def test_pal_coefficients_are_hstar(cs, parity):
    from clpoly.cl import cl_from_cs

    _, f = cl_from_cs(1, parity, cs)
    if f.degree < 1:
        return
    coeffs = express_in_pal(f).coeffs
    assert list(coeffs) == list(hstar_from_poly(f).h[: f.degree // 2 + 1])
