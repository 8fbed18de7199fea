from __future__ import annotations

import random
from fractions import Fraction

import pytest

from clpoly.cl import cl_from_cs
from clpoly.cone import (
    AffineIneq,
    VietaVector,
    appendix_compare,
    enumerate_vertices,
    generate_inequalities,
    hstar_linear_forms,
    in_region,
    lattice_check,
    load_reference,
    prop42_closed_forms,
    sufficient_condition_check,
    vertex_identity_check,
    vieta,
    vieta_from_cpoly,
)
from clpoly.errors import MissingReference
from clpoly.hstar import diamond_check
from clpoly.linalg import det
from clpoly.poly import Poly


def test_vieta():
    assert vieta([2, 3]).v == (5, 6)
    assert vieta([]).v == ()
    assert vieta_from_cpoly(Poly([12, -22, 1])).v == (22, 12)


def test_linear_forms():
    forms = hstar_linear_forms(4)
    assert forms[0].normal == (0, 1) and forms[0].offset == 0
    assert AffineIneq.primitive(forms[1].normal, forms[1].offset) == AffineIneq((1, -2), 2)
    f2 = hstar_linear_forms(2)[1]
    assert f2.normal == (-2,) and f2.offset == 2


@pytest.mark.parametrize("d", range(1, 21))
def test_forms_are_palindromic(d):
    forms = hstar_linear_forms(d)
    assert all(forms[i] == forms[d - i] for i in range(d + 1))


def test_inequalities_examples():
    assert generate_inequalities(4) == (AffineIneq((0, 1), 0), AffineIneq((1, -2), 2), AffineIneq((-2, 3), 8))
    assert generate_inequalities(5) == (AffineIneq((0, 1), 0), AffineIneq((2, -1), 4), AffineIneq((-3, 1), 54))
    assert generate_inequalities(2) == (AffineIneq((1,), 0), AffineIneq((-1,), 1))


@pytest.mark.parametrize("d", range(2, 21))
def test_closed_forms_match_generated(d):
    gen = generate_inequalities(d)
    first, second = prop42_closed_forms(d)
    assert gen[0] == first and gen[1] == second


def test_vertices_examples():
    assert {v.as_ints() for v in enumerate_vertices(4)} == {(22, 12), (4, 0), (-2, 0)}
    assert {v.as_ints() for v in enumerate_vertices(5)} == {(58, 120), (18, 0), (-2, 0)}
    assert {v.as_ints() for v in enumerate_vertices(2)} == {(0,), (1,)}


@pytest.mark.parametrize("d", range(2, 21))
def test_simplex_structure(d):
    verts = enumerate_vertices(d)
    ineqs = generate_inequalities(d)
    m = d // 2
    assert len(verts) == len(ineqs) == m + 1
    for v in verts:
        tight = sum(1 for q in ineqs if q.value(v.v) == 0)
        assert tight == m and all(q.holds(v.v) for q in ineqs)
    base = verts[0].v
    diffs = [[a - b for a, b in zip(v.v, base)] for v in verts[1:]]
    assert det(diffs) != 0
    assert vertex_identity_check(d).bijection


def test_lattice_check():
    assert lattice_check(enumerate_vertices(4))
    assert lattice_check(enumerate_vertices(14))
    assert not lattice_check([VietaVector(4, (Fraction(1, 2), 0))])


def test_sufficient_condition():
    assert sufficient_condition_check([1], 2)
    assert sufficient_condition_check([2], 3)
    assert not sufficient_condition_check([Fraction(3, 2)], 2)


@pytest.mark.parametrize("d", range(4, 15))
def test_appendix(d):
    assert appendix_compare(d).match


def test_appendix_bounds():
    with pytest.raises(MissingReference):
        appendix_compare(15)
    ref = load_reference()
    assert ref["corrections"][0]["degree"] == 14


def test_soundness_sample():
    rng = random.Random(7)
    agree = 0
    for _ in range(80):
        d = rng.randint(2, 10)
        cs = [Fraction(rng.randint(1, 60), rng.randint(1, 4)) + Fraction(1, 4) for _ in range(d // 2)]
        _, p = cl_from_cs(1, "odd" if d % 2 else "even", cs)
        agree += in_region(vieta(cs, d)) == diamond_check(p).diamond
    assert agree == 80


def test_sufficient_condition_and_necessary_facets():
    rng = random.Random(11)
    for _ in range(150):
        d = rng.randint(2, 12)
        m = d // 2
        extra = 2 if d % 2 else 1
        cs = sorted(Fraction(1, 4) + Fraction(rng.randint(0, 100), 100) * (2 * i + extra + 2) for i in range(m))
        _, p = cl_from_cs(1, "odd" if d % 2 else "even", cs)
        diamond = diamond_check(p).diamond
        if sufficient_condition_check(cs, d):
            assert diamond
        if diamond:
            v = vieta(cs, d).v
            assert all(q.holds(v) for q in prop42_closed_forms(d))
