"""CL-polynomials: construction, detection and critical-line roots.

A CL-polynomial has the shape ``a * b(z) * prod(z**2 + z + c_i)`` with real
``c_i >= 1/4`` and ``b(z) = 1`` (even degree) or ``b(z) = 2z + 1`` (odd
degree).  Everything is organised around the substitution ``s = z**2 + z``:
every polynomial splits uniquely as ``g(s) + (2z + 1) h(s)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Union

from .errors import RejectC, RejectScale
from .poly import Poly, to_fraction
from .realroots import (
    DEFAULT_WIDTH,
    IsolatingInterval,
    SqrtRoot,
    count_real_roots,
    isolate_real_roots,
    max_real_root,
    refine,
    squarefree_part,
)

Parity = Literal["even", "odd"]

QUARTER = Fraction(1, 4)
S = Poly([0, 1, 1])  # z^2 + z
LINEAR = Poly([1, 2])  # 2z + 1


@dataclass(frozen=True)
class SDecomposition:
    g: Poly
    h: Poly

    def recompose(self) -> Poly:
        return self.g.compose(S) + LINEAR * self.h.compose(S)


def s_decompose(p: Poly) -> SDecomposition:
    """The unique ``(g, h)`` with ``p(z) = g(z^2+z) + (2z+1) h(z^2+z)``."""
    g, h = [], []
    r = p
    while not r.is_zero():
        q, rem = r.divmod(S)
        r0, r1 = rem[0], rem[1]
        # r0 + r1 z = (r0 - r1/2) + (r1/2)(2z + 1)
        g.append(r0 - r1 / 2)
        h.append(r1 / 2)
        r = q
    return SDecomposition(Poly(g), Poly(h))


@dataclass(frozen=True)
class CLForm:
    """``scale * b(z) * C~(z^2 + z)`` where ``c_poly(u) = prod(u - c_i)``."""

    scale: Fraction
    parity: Parity
    c_poly: Poly

    @property
    def degree(self) -> int:
        return 2 * self.c_poly.degree + (1 if self.parity == "odd" else 0)

    def s_poly(self) -> Poly:
        """``prod(s + c_i)``, i.e. ``(-1)^m c_poly(-s)``."""
        m = self.c_poly.degree
        sp = self.c_poly.compose(Poly([0, -1]))
        return sp if m % 2 == 0 else -sp

    def expand(self) -> Poly:
        f = self.s_poly().compose(S) * self.scale
        return LINEAR * f if self.parity == "odd" else f

    def cs(self) -> list[Fraction]:
        """The c_i, when all of them are rational (raises otherwise)."""
        out = []
        for iv in isolate_real_roots(self.c_poly):
            if not iv.exact:
                iv = refine(self.c_poly, iv, iv.width / 2**20)
            if not iv.exact:
                raise ValueError("c-polynomial has irrational roots")
            out.extend([iv.lo] * iv.multiplicity)
        return out


@dataclass(frozen=True)
class NotCL:
    """Negative verdict of :func:`cl_detect`."""

    reason: Literal["MixedParity", "ComplexC", "CSmall"]

    def __bool__(self) -> bool:
        return False


def cl_from_cs(scale, parity: Parity, cs: Iterable) -> tuple[CLForm, Poly]:
    scale = to_fraction(scale)
    if scale == 0:
        raise RejectScale("scale must be nonzero")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
    cs = [to_fraction(c) for c in cs]
    for c in cs:
        if c < QUARTER:
            raise RejectC(f"c = {c} is below 1/4")
    form = CLForm(scale, parity, Poly.from_roots(cs))
    return form, form.expand()


def cl_detect(p: Poly) -> Union[CLForm, NotCL]:
    """Decide exactly whether ``p`` is a CL-polynomial."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    dec = s_decompose(p)
    if p.degree % 2 == 0:
        parity, sp, other = "even", dec.g, dec.h
    else:
        parity, sp, other = "odd", dec.h, dec.g
    if not other.is_zero():
        return NotCL("MixedParity")
    m = sp.degree
    if m > 0:
        # real-rootedness of sp is decided on distinct roots
        distinct = squarefree_part(sp).degree
        if count_real_roots(sp) < distinct:
            return NotCL("ComplexC")
        if count_real_roots(sp, None, -QUARTER) < distinct:
            return NotCL("CSmall")
    c_poly = sp.compose(Poly([0, -1])).monic()
    return CLForm(sp.lc, parity, c_poly)


# -- roots on the critical line -------------------------------------------------

@dataclass(frozen=True)
class CLRoot:
    """Root ``-1/2 + t*i`` with ``t`` enclosed by ``imag``."""

    imag: IsolatingInterval
    multiplicity: int

    real: Fraction = field(default=Fraction(-1, 2))


@dataclass(frozen=True)
class RootReport:
    form: CLForm
    roots: tuple[CLRoot, ...]
    handles: tuple = field(default=(), repr=False, compare=False)

    def max_imag(self) -> IsolatingInterval:
        return self.roots[-1].imag

    def decimals(self, digits: int) -> list[str]:
        """Certified decimal rendering of each imaginary part (ascending)."""
        return [_render(h, digits) for h in self.handles]


def _render(handle, digits: int) -> str:
    sign, root = handle
    if root is None:
        return _zero(digits)
    text = root.decimal(digits)
    if sign < 0 and text.strip("0.") != "":
        return "-" + text
    return text


def _zero(digits: int) -> str:
    return "0" if digits == 0 else "0." + "0" * digits


def cl_roots(form: CLForm, precision=Fraction(1, 10**9)) -> RootReport:
    """All roots of a CL-form: ``-1/2 ± sqrt(c - 1/4) i`` plus ``-1/2`` for odd parity."""
    precision = to_fraction(precision)
    positive: list[tuple[SqrtRoot, IsolatingInterval, int]] = []
    zero_mult = 1 if form.parity == "odd" else 0
    cp = form.c_poly
    if cp.degree > 0:
        quarter_is_root = cp(QUARTER) == 0
        for iv in isolate_real_roots(cp):
            if quarter_is_root and iv.contains(QUARTER):
                # c = 1/4 exactly: a double root at -1/2 per factor
                zero_mult += 2 * iv.multiplicity
                continue
            while iv.lo <= QUARTER and not iv.exact:
                iv = refine(cp, iv, iv.width / 2)
            handle = SqrtRoot(cp, iv, QUARTER)
            positive.append((handle, handle.interval(precision), iv.multiplicity))
    roots, handles = [], []
    for handle, t_iv, k in reversed(positive):
        roots.append(CLRoot(IsolatingInterval(-t_iv.hi, -t_iv.lo, k), k))
        handles.append((-1, handle))
    if zero_mult:
        roots.append(CLRoot(IsolatingInterval(Fraction(0), Fraction(0), zero_mult), zero_mult))
        handles.append((1, None))
    for handle, t_iv, k in positive:
        roots.append(CLRoot(t_iv, k))
        handles.append((1, handle))
    return RootReport(form, tuple(roots), tuple(handles))


def max_imag_part(form: CLForm, width=DEFAULT_WIDTH) -> SqrtRoot | None:
    """Largest imaginary part among the roots (``None`` if every root is ``-1/2``)."""
    cp = form.c_poly
    if cp.degree <= 0:
        return None
    iv = max_real_root(cp, width)
    if iv.contains(QUARTER) and cp(QUARTER) == 0:
        return None
    while iv.lo <= QUARTER:
        iv = refine(cp, iv, iv.width / 2)
    return SqrtRoot(cp, iv, QUARTER)


def imag_poly(form: CLForm) -> Poly:
    """Real polynomial in ``t`` whose roots are the imaginary parts (with multiplicity)."""
    q = form.c_poly.compose(Poly([QUARTER, 0, 1]))
    return q * Poly([0, 1]) if form.parity == "odd" else q

