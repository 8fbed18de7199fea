"""Binomial and palindromic bases, restriction to the critical line, extremal roots.

``b_i^d(z) = (z+d-i)(z+d-i-1)...(z-i+1) = d! binom(z+d-i, d)`` and
``p_i^d = b_i^d + b_{d-i}^d`` (just ``b_i^d`` for the middle index of even d).
A polynomial with palindromic h*-vector satisfies
``d! f = sum_{i <= d/2} h_i p_i^d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvariantViolation, NoPositiveRoot, NotCLClass, NotExpressible
from .linalg import solve
from .poly import Poly, to_fraction
from .realroots import DEFAULT_WIDTH, IsolatingInterval, SqrtRoot, max_positive_sqrt_root


@lru_cache(maxsize=None)
def binom_basis(i: int, d: int) -> Poly:
    if not 0 <= i <= d:
        raise ValueError(f"need 0 <= i <= d, got i={i}, d={d}")
    p = Poly([1])
    for j in range(d):
        p = p * Poly([d - i - j, 1])
    return p


@lru_cache(maxsize=None)
def pal_basis(i: int, d: int) -> Poly:
    if not 0 <= 2 * i <= d:
        raise ValueError(f"need 0 <= i <= d/2, got i={i}, d={d}")
    if 2 * i == d:
        return binom_basis(i, d)
    return binom_basis(i, d) + binom_basis(d - i, d)


@dataclass(frozen=True)
class PalindromicCoeffs:
    degree: int
    coeffs: tuple[Fraction, ...]

    def combine(self) -> Poly:
        """``(1/d!) sum coeffs_i p_i^d``."""
        acc = Poly()
        for i, c in enumerate(self.coeffs):
            acc = acc + pal_basis(i, self.degree) * c
        return acc / factorial(self.degree)


def express_in_pal(p: Poly) -> PalindromicCoeffs:
    """Coefficients ``x_i`` with ``d! p = sum x_i p_i^d``; raises ``NotExpressible``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    d = p.degree
    m = d // 2
    basis = [pal_basis(i, d) for i in range(m + 1)]
    rows = [[b[k] for b in basis] for k in range(d + 1)]
    rhs = [p[k] * factorial(d) for k in range(d + 1)]
    sol = solve(rows, rhs)
    if sol is None:
        raise NotExpressible(f"{p} is not in the span of the palindromic basis")
    return PalindromicCoeffs(d, tuple(sol))


@dataclass(frozen=True)
class CLRestriction:
    """``p(-1/2 + t i) = unit * q(t)`` with ``q`` real and ``lc(q) > 0``.

    ``unit`` is ``(re, im)`` of one of ``1, -1, i, -i``; ``reduced`` is the
    polynomial ``Q`` with ``q(t) = Q(t^2)`` (even degree) or ``t Q(t^2)``
    (odd degree).
    """

    degree_mod4: int
    q: Poly
    unit: tuple[int, int]
    reduced: Poly


def _split_on_cl(p: Poly) -> tuple[Poly, Poly]:
    """``A, B`` with ``p(-1/2 + t x) = A(t) + B(t) x`` where ``x^2 = -1``."""
    e = p.shift(Fraction(-1, 2)).coeffs
    a = [Fraction(0)] * len(e)
    b = [Fraction(0)] * len(e)
    for k, c in enumerate(e):
        sign = -1 if (k // 2) % 2 else 1
        if k % 2 == 0:
            a[k] = sign * c
        else:
            b[k] = sign * c
    return Poly(a), Poly(b)


def restrict_to_cl(p: Poly) -> CLRestriction:
    if p.is_zero():
        raise ValueError("zero polynomial")
    d = p.degree
    a, b = _split_on_cl(p)
    if d % 2 == 0:
        if not b.is_zero():
            raise NotCLClass(f"{p} is not real on the critical line")
        part, unit = a, (1, 0)
    else:
        if not a.is_zero():
            raise NotCLClass(f"{p} is not purely imaginary on the critical line")
        part, unit = b, (0, 1)
    if part.lc < 0:
        part = -part
        unit = (-unit[0], -unit[1])
    step = 2
    offset = d % 2
    reduced = Poly(part[k] for k in range(offset, part.degree + 1, step))
    return CLRestriction(d % 4, part, unit, reduced)


def extremal_a_root(i: int, d: int) -> SqrtRoot:
    """``a_i^d`` as a refinable handle (largest positive ``t`` with ``p_i^d(-1/2+ti) = 0``)."""
    res = restrict_to_cl(pal_basis(i, d))
    root = max_positive_sqrt_root(res.reduced)
    if root is None:
        raise NoPositiveRoot(f"p_{i}^{d} has no critical-line root with positive imaginary part")
    return root


def extremal_a(i: int, d: int, width=DEFAULT_WIDTH) -> IsolatingInterval:
    return extremal_a_root(i, d).interval(to_fraction(width))


def alpha_tilde_root(d: int) -> SqrtRoot:
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        # p_0^1 = 2z + 1 has only the root -1/2
        return SqrtRoot(Poly([0, 1]), IsolatingInterval(Fraction(0), Fraction(0)))
    try:
        return extremal_a_root(0, d)
    except NoPositiveRoot as exc:
        raise InvariantViolation(str(exc)) from None


def alpha_tilde(d: int, width=DEFAULT_WIDTH) -> IsolatingInterval:
    """Largest imaginary part among the roots of ``p_0^d``."""
    return alpha_tilde_root(d).interval(to_fraction(width))
