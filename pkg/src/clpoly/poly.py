"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order: ``Poly([1, 10, 5])`` is
``1 + 10x + 5x**2``.  Trailing zeros are stripped, so the zero polynomial
has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class ParseError(ValueError):
    """Raised when a rational or polynomial string cannot be parsed."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def to_fraction(x: Union[int, Fraction, str, Decimal]) -> Fraction:
    """Exact conversion; strings may be ``"p/q"`` or decimals like ``"0.125"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}", text.index("/") + 1)
        return Fraction(int(m.group(1)), den)
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty number", 0)
    try:
        value = Decimal(stripped)
    except InvalidOperation:
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in " +-.eE/")), 0)
        raise ParseError(f"not a rational number: {text!r}", bad) from None
    if not value.is_finite():
        raise ParseError(f"not a finite number: {text!r}", 0)
    return Fraction(value)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as ``"1, -3/2, 0.25"``."""
    out = []
    pos = 0
    for piece in text.split(","):
        try:
            out.append(parse_rational(piece))
        except ParseError as exc:
            raise ParseError(f"bad entry {piece.strip()!r}", pos + exc.position) from None
        pos += len(piece) + 1
    return out


class Poly:
    """Immutable exact polynomial over Q."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Union[Number, str]] = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, cs: Sequence[Fraction]) -> "Poly":
        # caller guarantees Fractions; only trailing zeros are stripped
        p = cls.__new__(cls)
        n = len(cs)
        while n and cs[n - 1] == 0:
            n -= 1
        object.__setattr__(p, "coeffs", tuple(cs[:n]))
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_fraction(r), 1])
        return p

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}*{mono}"
                else:
                    body = f"({a})*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Poly()
            return Poly._raw([c * a for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly._raw([a / c for a in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        q = [Fraction(0)] * max(len(r) - db, 0)
        for k in range(len(r) - 1 - db, -1, -1):
            t = r[k + db] / lb
            q[k] = t
            if t:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= t * b
        return Poly._raw(q), Poly._raw(r[:db] if db > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.lc

    def compose(self, inner: "Poly") -> "Poly":
        """Return ``self(inner(x))`` by Horner's rule."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, a: Number) -> "Poly":
        """Return ``self(x + a)`` (Taylor shift)."""
        a = to_fraction(a)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] += a * cs[k + 1]
        return Poly._raw(cs)

    def scale_var(self, a: Number) -> "Poly":
        """Return ``self(a * x)``."""
        a = to_fraction(a)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= a
        return Poly._raw(out)

    # -- evaluation --------------------------------------------------------

    def __call__(self, x: Union[Number, str]) -> Fraction:
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, re_part: Number, im_part: Number) -> tuple[Fraction, Fraction]:
        """Evaluate at ``re + im*i``; returns the exact (real, imaginary) pair."""
        a, b = to_fraction(re_part), to_fraction(im_part)
        pr, pi = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            pr, pi = pr * a - pi * b + c, pr * b + pi * a
        return pr, pi

    # -- integer views -----------------------------------------------------

    def primitive_int(self) -> list[int]:
        """Integer coefficient list equal to a positive multiple of ``self``, content 1."""
        if not self.coeffs:
            return []
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return [v // g for v in ints]

    @classmethod
    def from_ints(cls, ints: Sequence[int]) -> "Poly":
        return cls._raw([Fraction(v) for v in ints])


def poly_eval(p: Poly, x) -> Union[Fraction, tuple[Fraction, Fraction]]:
    """Exact evaluation at a rational or at a complex ``(re, im)`` pair."""
    if isinstance(x, tuple):
        return p.eval_complex(*x)
    return p(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (computed with primitive integer remainders)."""
    from .realroots import int_gcd

    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return Poly.from_ints(int_gcd(a.primitive_int(), b.primitive_int())).monic()
