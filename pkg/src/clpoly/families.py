"""Named families: p_0^d, standard reflexive simplices, bounds, order checks, witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import mpmath

from .cl import LINEAR, QUARTER, cl_detect, max_imag_part
from .errors import InvariantViolation, NoPositiveRoot, OutOfRange
from .hstar import HStarVector, diamond_check, poly_from_hstar
from .palindromic import _split_on_cl, alpha_tilde_root, extremal_a_root, pal_basis
from .poly import Poly, to_fraction
from .realroots import (
    DEFAULT_WIDTH,
    IsolatingInterval,
    SqrtRoot,
    compare_sqrt,
    compare_sqrt_rational,
    format_fixed,
)

ZERO_ROOT = SqrtRoot(Poly([0, 1]), IsolatingInterval(Fraction(0), Fraction(0)))


def p0_poly(d: int) -> Poly:
    if d < 1:
        raise ValueError("d must be positive")
    return pal_basis(0, d)


@lru_cache(maxsize=None)
def simplex_sr_poly(d: int) -> Poly:
    """Ehrhart polynomial of the standard reflexive simplex (h* all ones)."""
    if d < 1:
        raise ValueError("d must be positive")
    return poly_from_hstar(HStarVector.of([1] * (d + 1)))


@lru_cache(maxsize=None)
def a_sr_root(d: int) -> SqrtRoot:
    form = cl_detect(simplex_sr_poly(d))
    if not form:
        raise InvariantViolation(f"standard reflexive simplex of dimension {d} is not CL ({form.reason})")
    root = max_imag_part(form)
    return ZERO_ROOT if root is None else root


def a_sr(d: int, width=DEFAULT_WIDTH) -> IsolatingInterval:
    return a_sr_root(d).interval(to_fraction(width))


# -- bounds table -------------------------------------------------------------

def d_squared_over_pi(d: int, digits: int) -> str:
    """Correctly rounded decimal of ``d^2 / pi`` (display only)."""
    with mpmath.workdps(digits + 40):
        val = mpmath.mpf(d * d) / mpmath.pi
        text = mpmath.nstr(val, digits + 35, strip_zeros=False)
    return format_fixed(Fraction(Decimal(text)), digits)


@dataclass(frozen=True)
class BoundsRow:
    d: int
    alpha_tilde: SqrtRoot
    beta_sr: SqrtRoot
    braun_disc: Fraction

    def braun_develin(self, digits: int) -> str:
        return d_squared_over_pi(self.d, digits)

    def render(self, digits: int) -> dict:
        return {
            "d": self.d,
            "alpha_tilde": self.alpha_tilde.decimal(digits),
            "beta_sr": self.beta_sr.decimal(digits),
            "d2_over_pi": self.braun_develin(digits),
            "d_times_d_minus_half": format_fixed(self.braun_disc, 0)
            if self.braun_disc.denominator == 1
            else format_fixed(self.braun_disc, 1),
        }

    def consistent(self) -> bool:
        """``beta_sr <= alpha_tilde``, and ``alpha_tilde < d(d - 1/2)`` for ``d >= 2``."""
        if compare_sqrt(self.beta_sr, self.alpha_tilde) > 0:
            return False
        if self.d >= 2:
            # compare squares: alpha^2 < (d(d - 1/2))^2
            return compare_sqrt_rational(self.alpha_tilde, self.braun_disc) < 0
        return True


def bounds_row(d: int) -> BoundsRow:
    return BoundsRow(d, alpha_tilde_root(d), a_sr_root(d), Fraction(d) * (d - QUARTER * 2))


def bounds_table(ds: Sequence[int]) -> list[BoundsRow]:
    return [bounds_row(d) for d in ds]


# -- order checks -------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    d: int
    labels: tuple[str, ...]
    values: tuple[Optional[SqrtRoot], ...]
    holds: bool
    skipped: tuple[str, ...]

    def decimals(self, digits: int) -> list[Optional[str]]:
        return [None if v is None else v.decimal(digits) for v in self.values]


def _a_or_none(i: int, d: int) -> Optional[SqrtRoot]:
    try:
        return extremal_a_root(i, d)
    except NoPositiveRoot:
        return None


def prop36_order_check(d: int) -> ChainReport:
    """``a_1 < a_sr < a_0`` for ``d <= 5``; ``a_2 < a_sr < a_1 < a_0`` for ``6 <= d <= 10``.

    At ``d = 10`` the longer chain is expected to fail.  An ``a_i`` without a
    positive root (highest index of small degrees) is dropped from the chain.
    """
    if not 2 <= d <= 10:
        raise ValueError("order checks cover 2 <= d <= 10")
    if d <= 5:
        labels = ("a_1", "a_sr", "a_0")
    else:
        labels = ("a_2", "a_sr", "a_1", "a_0")
    values = tuple(a_sr_root(d) if lab == "a_sr" else _a_or_none(int(lab[2:]), d) for lab in labels)
    present = [v for v in values if v is not None]
    holds = all(compare_sqrt(x, y) < 0 for x, y in zip(present, present[1:]))
    skipped = tuple(lab for lab, v in zip(labels, values) if v is None)
    return ChainReport(d, labels, values, holds, skipped)


@dataclass(frozen=True)
class FamilyReport:
    m: int
    poly: Poly
    is_cl: bool
    diamond: bool
    max_imag: Optional[SqrtRoot]
    exceeds_sr: Optional[bool]


def degree10_poly(m: int) -> Poly:
    """``p_0 + p_1 + m p_2 + p_3 + p_4 + p_5`` in degree 10."""
    coeffs = [1, 1, m, 1, 1, 1]
    acc = Poly()
    for i, c in enumerate(coeffs):
        acc = acc + pal_basis(i, 10) * c
    return acc


def degree10_family(m: int) -> FamilyReport:
    f = degree10_poly(m)
    form = cl_detect(f)
    diamond = diamond_check(f).diamond
    if not form:
        return FamilyReport(m, f, False, diamond, None, None)
    root = max_imag_part(form) or ZERO_ROOT
    return FamilyReport(m, f, True, diamond, root, compare_sqrt(root, a_sr_root(10)) > 0)


# -- Omega witnesses ----------------------------------------------------------

@dataclass(frozen=True)
class OmegaWitness:
    d: int
    t0: Fraction
    c: Fraction
    poly: Poly
    is_cl: bool
    diamond: bool
    vanishes: bool


def _cl_part(p: Poly) -> Poly:
    a, b = _split_on_cl(p)
    return a if p.degree % 2 == 0 else b


def omega_witness(d: int, t0) -> OmegaWitness:
    """A (♦) CL-polynomial of degree ``d`` vanishing at ``-1/2 + t0 i``.

    Takes ``f = p_0^d + c (2z+1) p_0^(d-1)`` where ``c`` cancels the
    restrictions to the critical line at ``t0``; requires
    ``a~_(d-1) < t0 < a~_d``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    t0 = to_fraction(t0)
    if compare_sqrt_rational(alpha_tilde_root(d - 1), t0) >= 0 or compare_sqrt_rational(alpha_tilde_root(d), t0) <= 0:
        raise OutOfRange(f"t0 = {t0} is not strictly between a~_{d - 1} and a~_{d}")
    head = p0_poly(d)
    tail = LINEAR * p0_poly(d - 1)
    x = _cl_part(tail)(t0)
    if x == 0:
        raise OutOfRange(f"t0 = {t0} is a root of (2z+1) p_0^{d - 1}")
    c = -_cl_part(head)(t0) / x
    if c <= 0:
        raise InvariantViolation(f"witness coefficient c = {c} is not positive")
    f = head + tail * c
    is_cl = bool(cl_detect(f))
    diamond = diamond_check(f).diamond
    vanishes = f.eval_complex(Fraction(-1, 2), t0) == (0, 0)
    if not (is_cl and diamond and vanishes):
        raise InvariantViolation(f"witness at t0 = {t0} fails (CL={is_cl}, diamond={diamond}, root={vanishes})")
    return OmegaWitness(d, t0, c, f, is_cl, diamond, vanishes)


# -- degree two -----------------------------------------------------------------

def degree2_imag_squared(c) -> Fraction:
    """Squared imaginary part of the roots of the polynomial with h* = (1, c, 1)."""
    e = poly_from_hstar(HStarVector.of([1, to_fraction(c), 1]))
    return e[0] / e[2] - QUARTER


def degree2_closed_form(c) -> Fraction:
    """``(12 + 4c - c^2) / (2c + 4)^2``, the square of the stated root formula."""
    c = to_fraction(c)
    return (12 + 4 * c - c * c) / (2 * c + 4) ** 2


def degree2_check(grid: Sequence) -> bool:
    """Closed form agrees on ``grid`` (within ``[0, 6]``) and the map is strictly decreasing."""
    grid = sorted(to_fraction(c) for c in grid)
    vals = [degree2_imag_squared(c) for c in grid]
    agree = all(v == degree2_closed_form(c) for v, c in zip(vals, grid))
    return agree and all(a > b for a, b in zip(vals, vals[1:]))
