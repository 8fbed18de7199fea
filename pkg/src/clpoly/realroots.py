"""Exact real-root counting, isolation and refinement (Sturm sequences).

All decisions are made by exact sign evaluation of integer polynomials at
rational points.  Internally a polynomial is a list of Python ints in
ascending order; ``Poly`` objects are converted with ``primitive_int``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, isfinite, isqrt, log2
from typing import Optional, Sequence

from .poly import Poly, to_fraction

DEFAULT_WIDTH = Fraction(1, 2**64)

IntPoly = list


class NoRealRoot(ValueError):
    """The polynomial has no real root where one was requested."""


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed interval ``[lo, hi]`` holding exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __float__(self) -> float:
        return float(self.midpoint)


# -- integer polynomial kernels ---------------------------------------------

def _trim(a: IntPoly) -> IntPoly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _primitive(a: IntPoly) -> IntPoly:
    g = reduce(gcd, a, 0)
    if g in (0, 1):
        return a
    return [v // g for v in a]


def _int_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Positive multiple of ``a mod b``, made primitive."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    alb = abs(lb)
    sb = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        lr = r[-1]
        # r <- |lb| r - sign(lb) lr x^k b  keeps the positive-multiple property
        r = [alb * v for v in r]
        f = sb * lr
        for j, bv in enumerate(b):
            r[k + j] -= f * bv
        r = _trim(r)
        if r:
            r = _primitive(r)
    return r


def int_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a, b = _trim(list(a)), _trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    if not b:
        g = _primitive(a)
    else:
        a, b = _primitive(a), _primitive(b)
        while b:
            a, b = b, _int_rem(a, b)
        g = _primitive(a)
    if g and g[-1] < 0:
        g = [-v for v in g]
    return g


def _int_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient of ``a`` by ``b`` over Q, returned primitive (division is exact)."""
    qa = Poly.from_ints(a)
    qb = Poly.from_ints(b)
    q, r = qa.divmod(qb)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q.primitive_int()


def _derivative(a: IntPoly) -> IntPoly:
    return [k * v for k, v in enumerate(a)][1:]


def sign_at(a: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``a`` at the rational ``x``."""
    if not a:
        return 0
    num, den = x.numerator, x.denominator
    acc = 0
    if den == 1:
        for v in reversed(a):
            acc = acc * num + v
    else:
        # homogenised Horner: sum a_k num^k den^(n-k)
        dpow = 1
        for v in reversed(a):
            acc = acc * num + v * dpow
            dpow *= den
    return (acc > 0) - (acc < 0)


def _sign_at_inf(a: Sequence[int], positive: bool) -> int:
    if not a:
        return 0
    s = 1 if a[-1] > 0 else -1
    if not positive and (len(a) - 1) % 2:
        s = -s
    return s


# -- cached square-free parts and Sturm chains --------------------------------

@lru_cache(maxsize=512)
def _sqf_int(p: Poly) -> tuple[int, ...]:
    a = p.primitive_int()
    if len(a) <= 2:
        return tuple(a)
    # the last Sturm remainder of a is gcd(a, a') up to a constant
    g = list(_sturm_int(tuple(a))[-1])
    if len(g) == 1:
        return tuple(a)
    return tuple(_int_exact_div(a, g))


def squarefree_part(p: Poly) -> Poly:
    return Poly.from_ints(_sqf_int(p))


@lru_cache(maxsize=512)
def _sturm_int(sqf: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    a = list(sqf)
    chain = [a]
    if len(a) <= 1:
        return (tuple(a),)
    b = _primitive(_derivative(a))
    while b:
        chain.append(b)
        r = _int_rem(chain[-2], b)
        b = [-v for v in r]
    return tuple(tuple(c) for c in chain)


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain of the square-free part of ``p`` (each entry a positive multiple)."""
    return [Poly.from_ints(c) for c in _sturm_int(_sqf_int(p))]


def _variations(chain, x: Optional[Fraction], positive: bool = True) -> int:
    signs = []
    for c in chain:
        s = sign_at(c, x) if x is not None else _sign_at_inf(c, positive)
        if s:
            signs.append(s)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _count(chain, lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
    vlo = _variations(chain, lo, positive=False)
    vhi = _variations(chain, hi, positive=True)
    return vlo - vhi


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``None`` means infinite."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    lo = None if lo is None else to_fraction(lo)
    hi = None if hi is None else to_fraction(hi)
    if lo is not None and hi is not None and lo >= hi:
        return 0
    return _count(_sturm_int(_sqf_int(p)), lo, hi)


# -- bounds -------------------------------------------------------------------

def cauchy_bound(a: Sequence[int]) -> int:
    """Integer ``B`` with every root of ``a`` strictly inside ``(-B, B)``."""
    if len(a) <= 1:
        return 1
    lead = abs(a[-1])
    m = max(abs(v) for v in a[:-1])
    return 1 + -(-m // lead) + 1


def sqrt_bounds(x: Fraction, bits: int = 80) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= sqrt(x) <= hi`` with ``hi - lo <= 2**-bits`` (x >= 0)."""
    if x < 0:
        raise ValueError("negative argument")
    scale = 1 << (2 * bits)
    n = x.numerator * scale // x.denominator
    r = isqrt(n)
    lo = Fraction(r, 1 << bits)
    if lo * lo == x:
        return lo, lo
    return lo, Fraction(r + 1, 1 << bits)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in ``[lo, hi]`` (continued fractions)."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo, hi share integer part fl
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


# -- isolation ----------------------------------------------------------------

def _tighten(sqf, chain, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Given exactly one root in ``(lo, hi]``, return endpoints that are not roots.

    Returns ``(r, r)`` when the root is found exactly.
    """
    if sign_at(sqf, hi) == 0:
        return hi, hi
    while sign_at(sqf, lo) == 0:
        m = (lo + hi) / 2
        if sign_at(sqf, m) == 0:
            return m, m
        if _count(chain, m, hi) == 1:
            lo = m
        else:
            hi = m
    return lo, hi


def _isolate_sqf(sqf: tuple[int, ...]) -> list[tuple[Fraction, Fraction]]:
    if len(sqf) <= 1:
        return []
    if len(sqf) == 2:
        r = Fraction(-sqf[0], sqf[1])
        return [(r, r)]
    chain = _sturm_int(sqf)
    b = Fraction(cauchy_bound(sqf))
    out = []
    stack = [(-b, b, _count(chain, -b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_tighten(sqf, chain, lo, hi))
            continue
        m = (lo + hi) / 2
        nl = _count(chain, lo, m)
        stack.append((m, hi, n - nl))
        stack.append((lo, m, nl))
    out.sort()
    for i in range(len(out) - 1):
        a, b = out[i], out[i + 1]
        while a[1] >= b[0]:
            a = _halve(sqf, *a)
            if a[1] >= b[0]:
                b = _halve(sqf, *b)
        out[i], out[i + 1] = a, b
    return out


def _halve(sqf, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """One sign-bisection step on an isolating interval with a sign change."""
    if lo == hi:
        return lo, hi
    m = (lo + hi) / 2
    sm = sign_at(sqf, m)
    if sm == 0:
        return m, m
    if sm == sign_at(sqf, lo):
        return m, hi
    return lo, m


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lc * prod(f_k ** k)`` with pairwise coprime monic ``f_k``."""
    from .poly import poly_gcd

    if p.degree <= 0:
        return []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b // a
        c = d // a
        d = c - b.derivative()
        k += 1
    return out


def isolate_real_roots(p: Poly) -> list[IsolatingInterval]:
    """Disjoint ascending isolating intervals for all distinct real roots, with multiplicities."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sqf = _sqf_int(p)
    intervals = _isolate_sqf(sqf)
    if not intervals:
        return []
    factors = squarefree_decomposition(p)
    if len(factors) == 1:
        return [IsolatingInterval(lo, hi, factors[0][1]) for lo, hi in intervals]
    out = []
    for lo, hi in intervals:
        mult = 0
        for f, k in factors:
            fi = f.primitive_int()
            if lo == hi:
                hit = sign_at(fi, lo) == 0
            else:
                hit = sign_at(fi, lo) * sign_at(fi, hi) < 0
            if hit:
                mult = k
                break
        if mult == 0:
            raise ArithmeticError("multiplicity lookup failed")
        out.append(IsolatingInterval(lo, hi, mult))
    return out


def refine(p: Poly, iv: IsolatingInterval, width=DEFAULT_WIDTH) -> IsolatingInterval:
    """Bisect ``iv`` until ``hi - lo <= width``; exact roots collapse the interval."""
    width = to_fraction(width)
    lo, hi = to_fraction(iv.lo), to_fraction(iv.hi)
    if lo == hi:
        return IsolatingInterval(lo, hi, iv.multiplicity)
    sqf = _sqf_int(p)
    if len(sqf) == 2:
        r = Fraction(-sqf[0], sqf[1])
        if not lo <= r <= hi:
            raise ValueError("interval does not contain the root")
        return IsolatingInterval(r, r, iv.multiplicity)
    slo, shi = sign_at(sqf, lo), sign_at(sqf, hi)
    if slo == 0 and shi == 0:
        raise ValueError("both endpoints are roots; interval is not isolating")
    if shi == 0:
        return IsolatingInterval(hi, hi, iv.multiplicity)
    if slo == 0:
        return IsolatingInterval(lo, lo, iv.multiplicity)
    if slo == shi:
        raise ValueError("no sign change; interval does not isolate a simple root")
    step = 0
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sign_at(sqf, m)
        if sm == 0:
            return IsolatingInterval(m, m, iv.multiplicity)
        if sm == slo:
            lo = m
        else:
            hi = m
        step += 1
        if step % 8 == 0:
            r = simplest_between(lo, hi)
            if sign_at(sqf, r) == 0:
                return IsolatingInterval(r, r, iv.multiplicity)
    return IsolatingInterval(lo, hi, iv.multiplicity)


def max_real_root(p: Poly, width=DEFAULT_WIDTH) -> IsolatingInterval:
    """Greatest real root, refined to ``width``; raises ``NoRealRoot``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sqf = _sqf_int(p)
    if len(sqf) == 2:
        r = Fraction(-sqf[0], sqf[1])
        return _with_multiplicity(p, IsolatingInterval(r, r))
    chain = _sturm_int(sqf)
    total = _count(chain, None, None)
    if total == 0:
        raise NoRealRoot("polynomial has no real root")
    b = Fraction(cauchy_bound(sqf))
    lo, hi = -b, b
    bracket = _certified_top_bracket(sqf, chain)
    if bracket is not None:
        lo, hi = bracket
    while _count(chain, lo, hi) > 1:
        m = (lo + hi) / 2
        if _count(chain, m, hi) >= 1:
            lo = m
        else:
            hi = m
    lo, hi = _tighten(sqf, chain, lo, hi)
    iv = refine(p, IsolatingInterval(lo, hi), width)
    return _with_multiplicity(p, iv)


def _fujiwara_bound(a: Sequence[int]) -> float:
    n = len(a) - 1
    lead = log2(abs(a[-1]))
    best = 0.0
    for k in range(1, n + 1):
        v = a[n - k]
        if v:
            best = max(best, 2.0 ** ((log2(abs(v)) - lead) / k))
    return 2.0 * best + 1.0


def _estimate_top_root(a: Sequence[int], max_iter: int = 4000) -> Optional[float]:
    """Newton iteration from above the largest root (floats only guide the search)."""
    da = _derivative(list(a))
    x = _fujiwara_bound(a)
    for _ in range(max_iter):
        fx = Fraction(x)
        num = _eval_int(a, fx)
        den = _eval_int(da, fx)
        if den == 0:
            return None
        step = float(num / den)
        nx = x - step
        if not isfinite(nx):
            return None
        if abs(step) <= 1e-13 * max(1.0, abs(x)):
            return nx
        x = nx
    return None


def _eval_int(a: Sequence[int], x: Fraction) -> Fraction:
    num, den = x.numerator, x.denominator
    acc, dpow = 0, 1
    for v in reversed(a):
        acc = acc * num + v * dpow
        dpow *= den
    return Fraction(acc, den ** (len(a) - 1))


def _certified_top_bracket(sqf, chain) -> Optional[tuple[Fraction, Fraction]]:
    """``(lo, hi)`` with no root above ``hi`` and at least one in ``(lo, hi]``, or None."""
    if len(sqf) < 12:
        return None
    est = _estimate_top_root(sqf)
    if est is None:
        return None
    delta = 2.0 ** -24 * max(1.0, abs(est))
    for _ in range(6):
        lo = Fraction(est - delta).limit_denominator(1 << 20)
        hi = Fraction(est + delta).limit_denominator(1 << 20)
        if lo < hi and _count(chain, hi, None) == 0 and _count(chain, lo, hi) >= 1:
            return lo, hi
        delta *= 1024.0
    return None


def _with_multiplicity(p: Poly, iv: IsolatingInterval) -> IsolatingInterval:
    if p.degree == len(_sqf_int(p)) - 1:
        return iv
    for f, k in squarefree_decomposition(p):
        fi = f.primitive_int()
        if iv.exact:
            hit = sign_at(fi, iv.lo) == 0
        else:
            hit = sign_at(fi, iv.lo) * sign_at(fi, iv.hi) < 0
        if hit:
            return IsolatingInterval(iv.lo, iv.hi, k)
    raise ArithmeticError("multiplicity lookup failed")


def separate(p: Poly, a: IsolatingInterval, q: Poly, b: IsolatingInterval,
             max_steps: int = 256) -> tuple[IsolatingInterval, IsolatingInterval]:
    """Refine two intervals (roots of ``p`` and ``q``) until they are disjoint.

    Raises ``ArithmeticError`` after ``max_steps`` halvings (the roots are
    presumably equal; callers should test that with a gcd first).
    """
    for _ in range(max_steps):
        if a.hi < b.lo or b.hi < a.lo:
            return a, b
        if a.exact and b.exact and a.lo == b.lo:
            break
        a = refine(p, a, a.width / 2) if not a.exact else a
        b = refine(q, b, b.width / 2) if not b.exact else b
    raise ArithmeticError("could not separate roots; they may coincide")


def round_certified(p: Poly, iv: IsolatingInterval, digits: int,
                    max_steps: int = 400) -> tuple[str, IsolatingInterval]:
    """Decimal string with ``digits`` places that is correct for the isolated root.

    Refines until both endpoints round (half-even) to the same value.
    """
    scale = 10**digits
    for _ in range(max_steps):
        lo_r = round(iv.lo * scale)
        hi_r = round(iv.hi * scale)
        if lo_r == hi_r:
            return format_fixed(Fraction(lo_r, scale), digits), iv
        iv = refine(p, iv, iv.width / 4)
    raise ArithmeticError("root sits on a rounding boundary")


def format_fixed(x: Fraction, digits: int) -> str:
    """Render ``x`` with exactly ``digits`` decimals (half-even rounding)."""
    scale = 10**digits
    n = round(x * scale)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class SqrtRoot:
    """The number ``sqrt(r - shift)`` where ``r`` is the root of ``poly`` in ``iv``.

    Imaginary parts of critical-line roots come out this way: a root
    ``c`` of a c-polynomial gives ``t = sqrt(c - 1/4)``.
    """

    poly: Poly
    iv: IsolatingInterval
    shift: Fraction = Fraction(0)

    def _bounds(self, iv: IsolatingInterval, bits: int) -> tuple[Fraction, Fraction]:
        lo = iv.lo - self.shift
        hi = iv.hi - self.shift
        if hi < 0:
            raise ValueError("root lies below the shift")
        tlo = sqrt_bounds(lo, bits)[0] if lo > 0 else Fraction(0)
        thi = sqrt_bounds(hi, bits)[1]
        return tlo, thi

    def interval(self, width=DEFAULT_WIDTH) -> IsolatingInterval:
        width = to_fraction(width)
        bits = max(64, 2 * (width.denominator.bit_length() - width.numerator.bit_length()) + 8)
        iv = self.iv
        while True:
            tlo, thi = self._bounds(iv, bits)
            if thi - tlo <= width or iv.exact:
                return IsolatingInterval(tlo, thi, iv.multiplicity)
            iv = refine(self.poly, iv, iv.width / 16)

    def decimal(self, digits: int, max_steps: int = 400) -> str:
        scale = 10**digits
        iv = self.iv
        bits = 4 * digits + 64
        for _ in range(max_steps):
            tlo, thi = self._bounds(iv, bits)
            if round(tlo * scale) == round(thi * scale):
                return format_fixed(tlo, digits)
            if iv.exact:
                bits *= 2
                continue
            iv = refine(self.poly, iv, iv.width / 16)
        raise ArithmeticError("value sits on a rounding boundary")


def max_positive_sqrt_root(q: Poly, width=DEFAULT_WIDTH) -> Optional[SqrtRoot]:
    """``sqrt`` of the largest positive root of ``q``; ``None`` if there is none."""
    if count_real_roots(q, 0, None) == 0:
        return None
    iv = max_real_root(q, width)
    while iv.lo <= 0:
        iv = refine(q, iv, iv.width / 2)
    return SqrtRoot(q, iv)


def _radicand_interval(root: SqrtRoot, iv: IsolatingInterval) -> tuple[Fraction, Fraction]:
    return iv.lo - root.shift, iv.hi - root.shift


def compare_sqrt_rational(root: SqrtRoot, t, max_steps: int = 2000) -> int:
    """Sign of ``root - t`` for a rational ``t``, decided exactly."""
    t = to_fraction(t)
    if t < 0:
        return 1
    x = t * t + root.shift
    iv = root.iv
    if root.poly(x) == 0 and (iv.lo < x <= iv.hi or (iv.exact and iv.lo == x)):
        return 0
    for _ in range(max_steps):
        if iv.hi < x:
            return -1
        if iv.lo > x:
            return 1
        iv = refine(root.poly, iv, iv.width / 2)
    raise ArithmeticError("comparison did not terminate")


def compare_sqrt(a: SqrtRoot, b: SqrtRoot, max_steps: int = 512) -> int:
    """Sign of ``a - b``; equality is settled with a gcd."""
    ia, ib = a.iv, b.iv
    for _ in range(max_steps):
        alo, ahi = _radicand_interval(a, ia)
        blo, bhi = _radicand_interval(b, ib)
        if ahi < blo:
            return -1
        if bhi < alo:
            return 1
        if ia.exact and ib.exact:
            return (alo > blo) - (alo < blo)
        if ia.width >= ib.width and not ia.exact:
            ia = refine(a.poly, ia, ia.width / 2)
        elif not ib.exact:
            ib = refine(b.poly, ib, ib.width / 2)
        else:
            ia = refine(a.poly, ia, ia.width / 2)
        if _ % 32 == 31 and _coincide(a, ia, b):
            return 0
    if _coincide(a, ia, b):
        return 0
    raise ArithmeticError("comparison did not terminate")


def _coincide(a: SqrtRoot, ia: IsolatingInterval, b: SqrtRoot) -> bool:
    """Is there a common root inside both isolating intervals (in ``a``'s variable)?"""
    moved = b.poly.shift(b.shift - a.shift)
    g = Poly.from_ints(int_gcd(a.poly.primitive_int(), moved.primitive_int()))
    if g.degree <= 0:
        return False
    lo = max(ia.lo, b.iv.lo - b.shift + a.shift)
    hi = min(ia.hi, b.iv.hi - b.shift + a.shift)
    if lo > hi:
        return False
    return g(lo) == 0 or (lo < hi and count_real_roots(g, lo, hi) > 0)
