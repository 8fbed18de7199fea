"""Interlacing on the critical line (exact) and on the unit circle (numeric oracle)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .cl import LINEAR, QUARTER, CLForm, cl_detect
from .errors import DegreeMismatch, NotCLInput, NotOnCircle
from .hstar import HStarVector
from .palindromic import pal_basis
from .poly import Poly
from .realroots import isolate_real_roots, sign_at, squarefree_decomposition, squarefree_part


@dataclass(frozen=True)
class OrderedRootList:
    """Roots along a carrier, ascending; ``positions`` are ranks or angles."""

    carrier: Literal["CL", "UnitCircle"]
    roots: tuple[tuple[object, int], ...]


def _weaves(a: Sequence, b: Sequence) -> bool:
    """``b_1 <= a_1 <= b_2 <= ... <= a_n <= b_{n+1}`` for sorted expanded lists."""
    if len(b) != len(a) + 1:
        return False
    return all(b[k] <= a[k] <= b[k + 1] for k in range(len(a)))


def _multiplicity_in(factors, lo: Fraction, hi: Fraction) -> int:
    for f, k in factors:
        fi = f.primitive_int()
        if lo == hi:
            if sign_at(fi, lo) == 0:
                return k
        elif sign_at(fi, lo) * sign_at(fi, hi) < 0:
            return k
    return 0


def cl_root_ranks(forms: Sequence[CLForm]) -> list[list[tuple[int, int]]]:
    """Common exact ordering of the critical-line roots of several CL-forms.

    Returns, per form, a list of ``(rank, multiplicity)``; equal ranks mean
    equal roots.  Imaginary parts ``t`` are ordered through ``c = t^2 + 1/4``
    on each half-line, so only the c-polynomials are ever isolated.
    """
    joint = Poly([1])
    for form in forms:
        joint = joint * form.c_poly
    distinct = squarefree_part(joint) if joint.degree > 0 else Poly([1])
    ivs = isolate_real_roots(distinct) if distinct.degree > 0 else []
    decomps = [squarefree_decomposition(f.c_poly) for f in forms]
    above: list = []
    per_form_zero = [1 if f.parity == "odd" else 0 for f in forms]
    for iv in ivs:
        is_quarter = distinct(QUARTER) == 0 and iv.contains(QUARTER)
        mults = [_multiplicity_in(dec, iv.lo, iv.hi) for dec in decomps]
        if is_quarter:
            for j, k in enumerate(mults):
                per_form_zero[j] += 2 * k
        else:
            above.append(mults)
    n = len(above)
    # ranks: negative side 0..n-1 (mirror), zero at n, positive n+1..2n
    out: list[list[tuple[int, int]]] = [[] for _ in forms]
    for idx in range(n - 1, -1, -1):
        rank = n - 1 - idx
        for j, k in enumerate(above[idx]):
            if k:
                out[j].append((rank, k))
    for j, k in enumerate(per_form_zero):
        if k:
            out[j].append((n, k))
    for idx in range(n):
        for j, k in enumerate(above[idx]):
            if k:
                out[j].append((n + 1 + idx, k))
    return out


def _expand(ranked: list[tuple[int, int]]) -> list[int]:
    return [r for r, k in ranked for _ in range(k)]


def cl_interlaces(f: Poly, g: Poly) -> bool:
    """Does ``f`` interlace ``g`` on the critical line (``deg g = deg f + 1``)?"""
    if g.degree != f.degree + 1:
        raise DegreeMismatch(f"deg g must be deg f + 1 (got {f.degree}, {g.degree})")
    ff, fg = cl_detect(f), cl_detect(g)
    if not ff:
        raise NotCLInput(f"first polynomial is not CL ({ff.reason})")
    if not fg:
        raise NotCLInput(f"second polynomial is not CL ({fg.reason})")
    rf, rg = cl_root_ranks([ff, fg])
    return _weaves(_expand(rf), _expand(rg))


# -- unit circle ------------------------------------------------------------------

def _monomial_family(p: Poly) -> int | None:
    """``n`` if ``p`` is a multiple of ``1 + t^n``, else ``None``."""
    n = p.degree
    if n >= 1 and p[0] == p.lc and all(p[k] == 0 for k in range(1, n)):
        return n
    return None


def _angles(p: Poly, tol: float) -> list[float]:
    n = _monomial_family(p)
    if n is not None:
        return [((1 + 2 * k) * math.pi / n) % (2 * math.pi) for k in range(n)]
    coeffs = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(coeffs)
    out = []
    for r in roots:
        if abs(abs(r) - 1.0) > tol:
            raise NotOnCircle(f"root {complex(r):.6g} has modulus {abs(r):.6g}")
        out.append(cmath.phase(r) % (2 * math.pi))
    return out


def circle_interlaces(hf: HStarVector, hg: HStarVector, tol: float = 1e-9) -> bool:
    """Numeric interlacing test of two h*-polynomials on the unit circle."""
    pf, pg = hf.as_poly(), hg.as_poly()
    if pf.degree + 1 != pg.degree:
        raise DegreeMismatch(f"h*-polynomial degrees {pf.degree}, {pg.degree} do not differ by one")
    af, ag = _angles(pf, tol), _angles(pg, tol)
    allang = sorted(af + ag)
    # cut the circle in the middle of the widest gap between roots
    best, cut = -1.0, 0.0
    for k, a in enumerate(allang):
        nxt = allang[(k + 1) % len(allang)] + (2 * math.pi if k + 1 == len(allang) else 0.0)
        if nxt - a > best:
            best, cut = nxt - a, (a + (nxt - a) / 2) % (2 * math.pi)
    rel_f = sorted((a - cut) % (2 * math.pi) for a in af)
    rel_g = sorted((a - cut) % (2 * math.pi) for a in ag)
    return all(
        rel_g[k] <= rel_f[k] + tol and rel_f[k] <= rel_g[k + 1] + tol for k in range(len(rel_f))
    )


def circle_order(hf: HStarVector, tol: float = 1e-9) -> OrderedRootList:
    ang = sorted(_angles(hf.as_poly(), tol))
    return OrderedRootList("UnitCircle", tuple((a, 1) for a in ang))


# -- named checks -------------------------------------------------------------------

def p0(d: int) -> Poly:
    return pal_basis(0, d)


def shifted_sum_pair(d: int) -> tuple[Poly, Poly]:
    """``(p_0^{d+1} + (2z+1) p_0^d,  (2z+1) p_0^{d+1})``."""
    f = p0(d + 1) + LINEAR * p0(d)
    return f, LINEAR * p0(d + 1)


def interlace_suite(d_max: int) -> list[dict]:
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    rows = []
    for d in range(1, d_max + 1):
        consecutive = cl_interlaces(p0(d), p0(d + 1))
        f, g = shifted_sum_pair(d)
        f_is_cl = bool(cl_detect(f))
        shifted_sum = f_is_cl and cl_interlaces(f, g)
        rows.append({"d": d, "consecutive": consecutive, "shifted_sum": shifted_sum, "shifted_sum_is_cl": f_is_cl})
    return rows
