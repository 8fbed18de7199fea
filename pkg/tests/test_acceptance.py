"""Acceptance criteria 1-10, one check per criterion.

Each ``criterion_*`` function returns ``(ok, detail)``.  Under pytest the
results are collected and printed as one PASS/FAIL line per criterion in the
terminal summary; ``python tests/test_acceptance.py`` prints the same lines.
"""
from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from clpoly.cl import cl_detect, cl_from_cs, max_imag_part
from clpoly.cone import (
    appendix_compare,
    enumerate_vertices,
    in_region,
    lattice_check,
    sufficient_condition_check,
    vieta,
)
from clpoly.families import (
    a_sr_root,
    degree10_family,
    omega_witness,
    p0_poly,
    prop36_order_check,
)
from clpoly.hstar import (
    HStarVector,
    diamond_check,
    hstar_from_poly,
    is_palindromic,
    mult_linear_update,
    mult_quadratic_update,
    poly_from_hstar,
)
from clpoly.interlace import interlace_suite
from clpoly.palindromic import alpha_tilde, alpha_tilde_root
from clpoly.poly import Poly
from clpoly.realroots import compare_sqrt

TABLE = {
    2: ("0.866", "0.645"),
    3: ("2.398", "1.658"),
    4: ("4.603", "3.040"),
    5: ("7.457", "4.761"),
    6: ("10.952", "6.811"),
    7: ("15.085", "9.186"),
    8: ("19.857", "11.882"),
    9: ("25.267", "14.899"),
    10: ("31.313", "18.236"),
    20: ("126.802", "69.147"),
    30: ("285.956", "151.904"),
    100: ("3182.575", "1622.493"),
    150: ("7161.449", "3627.845"),
}


def _rand_c(rng: random.Random, hi: int = 40) -> Fraction:
    return Fraction(1, 4) + Fraction(rng.randint(0, hi * 12), rng.randint(1, 12))


def _table_rows(ds):
    bad = []
    for d in ds:
        got = (alpha_tilde_root(d).decimal(3), a_sr_root(d).decimal(3))
        if got != TABLE[d]:
            bad.append((d, got, TABLE[d]))
    return bad


def criterion_1_small():
    t = time.perf_counter()
    bad = _table_rows([2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30])
    el = time.perf_counter() - t
    return not bad and el <= 60, f"d<=30: {len(bad)} mismatches, {el:.1f}s (limit 60s)"


def criterion_1_large():
    t = time.perf_counter()
    bad = _table_rows([100, 150])
    el = time.perf_counter() - t
    return not bad and el <= 300, f"d=100,150: {len(bad)} mismatches {bad}, {el:.1f}s (limit 300s)"


def criterion_2():
    fails = [d for d in range(4, 15) if not appendix_compare(d).match]
    lattice = all(lattice_check(enumerate_vertices(d)) for d in range(4, 15))
    spot = (1085, 104008, 1757196, 5132880, 1814400) in {v.as_ints() for v in enumerate_vertices(10)}
    return not fails and lattice and spot, f"mismatched degrees {fails}, lattice={lattice}, degree-10 spot vertex={spot}"


def criterion_3():
    rng = random.Random(3)
    fails = 0
    for _ in range(500):
        d = rng.randint(1, 20)
        cs = [_rand_c(rng) for _ in range(d // 2)]
        scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))
        _, p = cl_from_cs(scale, "odd" if d % 2 else "even", cs)
        fails += not is_palindromic(hstar_from_poly(p))
    return fails == 0, f"500 random CL-forms, {fails} non-palindromic"


def criterion_4():
    rng = random.Random(4)
    fails = 0
    for _ in range(500):
        d = rng.randint(0, 12)
        hv = HStarVector.of([Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(d + 1)])
        c = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        base = poly_from_hstar(hv)
        quad = hstar_from_poly(base * Poly([c, 1, 1]), degree=d + 2)
        lin = hstar_from_poly(base * Poly([1, 2]), degree=d + 1)
        fails += mult_quadratic_update(hv, c) != quad
        fails += mult_linear_update(hv) != lin
    return fails == 0, f"500 random (h, c), {fails} disagreements"


def criterion_5():
    rng = random.Random(5)
    violations = 0
    not_diamond = 0
    attained = True
    for d in range(3, 13):
        top = alpha_tilde_root(d)
        extra = 2 if d % 2 else 1
        for _ in range(200):
            m = d // 2
            cs = []
            for i in range(m):
                bound = 2 * i + extra
                cs.append(Fraction(1, 4) + (bound - Fraction(1, 4)) * Fraction(rng.randint(0, 1000), 1000))
            cs.sort()
            assert sufficient_condition_check(cs, d)
            form, p = cl_from_cs(1, "odd" if d % 2 else "even", cs)
            not_diamond += not diamond_check(p).diamond
            root = max_imag_part(form)
            if root is not None and compare_sqrt(root, top) > 0:
                violations += 1
        own = max_imag_part(cl_detect(p0_poly(d)))
        eps = Fraction(1, 10**12)
        a, b = own.interval(eps), alpha_tilde(d, eps)
        attained &= compare_sqrt(own, top) == 0 and a.lo <= b.hi and b.lo <= a.hi
    ok = violations == 0 and not_diamond == 0 and attained
    return ok, f"2000 samples d=3..12: {violations} above bound, {not_diamond} outside (♦); p_0^d attains: {attained}"


def criterion_6():
    rows = interlace_suite(20)
    bad = [r["d"] for r in rows if not (r["consecutive"] and r["shifted_sum"])]
    return not bad, f"d=1..20, failing degrees {bad}"


def criterion_7():
    short = all(prop36_order_check(d).holds for d in range(2, 6))
    long_ = all(prop36_order_check(d).holds for d in range(6, 10))
    ten_breaks = not prop36_order_check(10).holds
    family = [degree10_family(m) for m in range(2, 15)]
    fam_ok = all(r.is_cl and r.exceeds_sr for r in family)
    ok = short and long_ and ten_breaks and fam_ok
    return ok, f"d<=5 chain {short}, 6..9 chain {long_}, d=10 chain fails {ten_breaks}, family m=2..14 exceeds a_sr(10) {fam_ok}"


def criterion_8():
    fails = 0
    eps = Fraction(1, 10**6)
    for d in range(2, 13):
        lo = alpha_tilde(d - 1, eps).hi
        hi = alpha_tilde(d, eps).lo
        for k in range(1, 21):
            t0 = (lo + (hi - lo) * Fraction(k, 21)).limit_denominator(10**4)
            try:
                w = omega_witness(d, t0)
            except Exception:
                fails += 1
                continue
            fails += not (w.c > 0 and w.is_cl and w.diamond and w.vanishes)
    return fails == 0, f"d=2..12 x 20 targets, {fails} failures"


def criterion_9():
    rng = random.Random(9)
    disagree = 0
    inside = 0
    for _ in range(500):
        d = rng.randint(2, 16)
        cs = [_rand_c(rng, 2 * (i + 2)) for i in range(d // 2)]
        _, p = cl_from_cs(1, "odd" if d % 2 else "even", cs)
        member = in_region(vieta(cs, d))
        inside += member
        disagree += member != diamond_check(p).diamond
    return disagree == 0, f"500 c-lists, {disagree} disagreements ({inside} inside, {500 - inside} outside)"


def _cli(*args) -> bytes:
    return subprocess.run(
        [sys.executable, "-m", "clpoly.cli", *args, "--json", "--deterministic"],
        check=True, capture_output=True,
    ).stdout


def criterion_10():
    rng = random.Random(10)
    fails = 0
    for _ in range(1000):
        d = rng.randint(0, 14)
        hv = HStarVector.of([Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(d + 1)])
        fails += hstar_from_poly(poly_from_hstar(hv), degree=d) != hv
    for _ in range(1000):
        d = rng.randint(1, 14)
        cs = [_rand_c(rng) for _ in range(d // 2)]
        scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))
        form, p = cl_from_cs(scale, "odd" if d % 2 else "even", cs)
        fails += cl_detect(p) != form
    runs = [
        ("analyze", "--coeffs", "1,1,1"),
        ("bounds", "--degrees", "2..6"),
        ("cone", "--degree", "8", "--check-appendix"),
    ]
    identical = all(_cli(*r) == _cli(*r) and json.loads(_cli(*r)) for r in runs)
    return fails == 0 and identical, f"2000 round trips, {fails} failures; CLI JSON byte-identical: {identical}"


CRITERIA = [
    ("criterion 1 (bounds table, d<=30)", criterion_1_small),
    ("criterion 1 (bounds table, d=100,150)", criterion_1_large),
    ("criterion 2 (reference cone data)", criterion_2),
    ("criterion 3 (palindromic h*)", criterion_3),
    ("criterion 4 (update rules)", criterion_4),
    ("criterion 5 (extremal root bound)", criterion_5),
    ("criterion 6 (interlacing)", criterion_6),
    ("criterion 7 (order chains)", criterion_7),
    ("criterion 8 (root-set witnesses)", criterion_8),
    ("criterion 9 (cone soundness)", criterion_9),
    ("criterion 10 (round trips, CLI determinism)", criterion_10),
]


@pytest.mark.parametrize("label,check", CRITERIA, ids=[f"c{i:02d}" for i in range(len(CRITERIA))])
def test_acceptance(label, check, record):
    ok, detail = check()
    record(label, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for label, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"{label}: {'PASS' if ok else 'FAIL'}  ({detail})", flush=True)
    sys.exit(1 if failed else 0)
