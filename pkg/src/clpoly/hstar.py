"""h*-vectors of arbitrary rational polynomials.

For a polynomial ``p`` of degree ``d`` the series ``sum_k p(k) t^k`` equals
``h*(t) / (1 - t)^(d+1)``; the h*-vector is the coefficient list of the
numerator.  Equivalently ``p(z) = sum_i h_i binom(z + d - i, d)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .poly import Poly, to_fraction


@dataclass(frozen=True)
class HStarVector:
    """``h_0*..h_d*``; the length is always ``degree + 1``."""

    degree: int
    h: tuple[Fraction, ...]

    def __post_init__(self):
        h = tuple(to_fraction(x) for x in self.h)
        object.__setattr__(self, "h", h)
        if len(h) != self.degree + 1:
            raise ValueError(f"h*-vector of degree {self.degree} needs {self.degree + 1} entries")

    @classmethod
    def of(cls, values: Sequence) -> "HStarVector":
        return cls(len(values) - 1, tuple(values))

    def __getitem__(self, i: int) -> Fraction:
        return self.h[i]

    def __len__(self) -> int:
        return len(self.h)

    def as_poly(self) -> Poly:
        """The h*-polynomial ``sum h_i t^i`` (trailing zeros dropped)."""
        return Poly(self.h)


def hstar_from_poly(p: Poly, degree: Optional[int] = None) -> HStarVector:
    """h*-vector by inverting the Ehrhart series with alternating binomials.

    ``degree`` may exceed ``deg p`` (the vector is then taken relative to
    ``(1 - t)^(degree+1)``).
    """
    d = p.degree if degree is None else degree
    if p.is_zero() and degree is None:
        raise ValueError("zero polynomial has no degree")
    if d < p.degree:
        raise ValueError("degree is smaller than the polynomial degree")
    values = [p(k) for k in range(d + 1)]
    signed = [(-1) ** j * comb(d + 1, j) for j in range(d + 1)]
    h = []
    for i in range(d + 1):
        acc = Fraction(0)
        for j in range(i + 1):
            acc += signed[j] * values[i - j]
        h.append(acc)
    return HStarVector(d, tuple(h))


def falling_basis(d: int) -> list[list[int]]:
    """Integer coefficient lists of ``(z+d-i)(z+d-i-1)...(z-i+1)`` for ``i = 0..d``."""
    cur = [1]
    for j in range(d):
        cur = _mul_linear(cur, d - j)
    out = [cur]
    for i in range(d):
        # b_{i+1} = b_i * (z - i) / (z + d - i)
        cur = _div_linear(_mul_linear(cur, -i), d - i)
        out.append(cur)
    return out


def _mul_linear(a: list[int], r: int) -> list[int]:
    """``a(z) * (z + r)``."""
    out = [0] * (len(a) + 1)
    for k, v in enumerate(a):
        out[k] += r * v
        out[k + 1] += v
    return out


def _div_linear(a: list[int], r: int) -> list[int]:
    """``a(z) / (z + r)``, assumed exact."""
    n = len(a) - 1
    q = [0] * n
    acc = 0
    # synthetic division by the root -r
    for k in range(n, 0, -1):
        acc = a[k] - r * acc
        q[k - 1] = acc
    if a[0] + acc * (-r) != 0:
        raise ArithmeticError("inexact division by linear factor")
    return q


def poly_from_hstar(hv: HStarVector) -> Poly:
    """``sum_i h_i binom(z + d - i, d)``."""
    d = hv.degree
    basis = falling_basis(d)
    acc = [Fraction(0)] * (d + 1)
    for hi, b in zip(hv.h, basis):
        if hi:
            for k, v in enumerate(b):
                acc[k] += hi * v
    fd = factorial(d)
    return Poly([c / fd for c in acc])


def is_palindromic(hv: HStarVector) -> bool:
    h = hv.h
    return all(h[i] == h[-1 - i] for i in range(len(h) // 2))


@dataclass(frozen=True)
class DiamondReport:
    is_cl: bool
    palindromic: bool
    nonnegative: bool
    diamond: bool
    hstar: HStarVector


def diamond_check(p: Poly) -> DiamondReport:
    """Palindromic and non-negative h*-vector, with the CL verdict alongside."""
    from .cl import cl_detect

    hv = hstar_from_poly(p)
    pal = is_palindromic(hv)
    nonneg = all(x >= 0 for x in hv.h)
    return DiamondReport(bool(cl_detect(p)), pal, nonneg, pal and nonneg, hv)


def mult_quadratic_update(hv: HStarVector, c) -> HStarVector:
    """h*-vector of ``(z^2 + z + c) * p`` from that of ``p``.

    Index ``i`` sends ``alpha`` to slot ``i``, ``beta`` to ``i+1`` and
    ``gamma`` to ``i+2``.
    """
    c = to_fraction(c)
    d = hv.degree
    out = [Fraction(0)] * (d + 3)
    for i, hi in enumerate(hv.h):
        if not hi:
            continue
        alpha = i * i + i + c
        beta = 2 * (d * i - i * i + d + 1 - c)
        gamma = d * d - 2 * d * i - i + i * i + d + c
        out[i] += hi * alpha
        out[i + 1] += hi * beta
        out[i + 2] += hi * gamma
    return HStarVector(d + 2, tuple(out))


def mult_linear_update(hv: HStarVector) -> HStarVector:
    """h*-vector of ``(2z + 1) * p``: ``t^n -> (2n+1) t^n + (2(d-n)+1) t^(n+1)``."""
    d = hv.degree
    out = [Fraction(0)] * (d + 2)
    for n, hn in enumerate(hv.h):
        out[n] += (2 * n + 1) * hn
        out[n + 1] += (2 * (d - n) + 1) * hn
    return HStarVector(d + 1, tuple(out))


def hibi_check(hv: HStarVector) -> Optional[bool]:
    """``h_1 <= h_i`` for ``1 <= i <= d-1``; ``None`` when ``h_d = 0`` (not applicable)."""
    h = hv.h
    d = hv.degree
    if h[d] == 0:
        return None
    if d < 2:
        return True
    return all(h[1] <= h[i] for i in range(1, d))
