"""The (♦) region of monic CL-polynomials in Vieta coordinates.

For ``f = b(z) prod(z^2 + z + c_i)`` write ``prod(s + c_i) = sum_l v_l s^(m-l)``
with ``v_0 = 1``.  Every h*-entry of ``f`` is affine in ``v = (v_1..v_m)``, so
(♦) cuts out a polyhedron; it turns out to be a simplex with one facet per
``h_i*``, ``i = 0..m``.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd, lcm
from typing import Optional, Sequence

from .cl import LINEAR, S
from .errors import DegreeMismatch, InvariantViolation, MissingReference, SingularSubsystem
from .hstar import hstar_from_poly
from .linalg import solve
from .palindromic import pal_basis
from .poly import Poly, to_fraction


@dataclass(frozen=True)
class VietaVector:
    """``v_1..v_m``; ``v_0 = 1`` is implicit."""

    degree: int
    v: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(to_fraction(x) for x in self.v))

    def full(self) -> tuple[Fraction, ...]:
        return (Fraction(1),) + self.v

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.v)

    def as_ints(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.v)


@dataclass(frozen=True)
class AffineForm:
    """``offset + <normal, v>`` over the rationals."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __call__(self, v: Sequence) -> Fraction:
        return self.offset + sum((a * to_fraction(x) for a, x in zip(self.normal, v)), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, AffineForm) and self.normal == other.normal and self.offset == other.offset

    def __hash__(self) -> int:
        return hash((self.normal, self.offset))


@dataclass(frozen=True)
class AffineIneq:
    """``<normal, v> + offset >= 0`` with coprime integer entries."""

    normal: tuple[int, ...]
    offset: int

    @classmethod
    def primitive(cls, normal: Sequence, offset) -> "AffineIneq":
        entries = [to_fraction(x) for x in normal] + [to_fraction(offset)]
        den = lcm(*(e.denominator for e in entries))
        ints = [int(e * den) for e in entries]
        g = gcd(*ints)
        if g == 0:
            raise ValueError("zero inequality")
        ints = [x // g for x in ints]
        return cls(tuple(ints[:-1]), ints[-1])

    def value(self, v: Sequence) -> Fraction:
        return self.offset + sum((a * to_fraction(x) for a, x in zip(self.normal, v)), Fraction(0))

    def holds(self, v: Sequence) -> bool:
        return self.value(v) >= 0

    def render(self) -> str:
        return f"<{self.normal}, v> + {self.offset} >= 0"


@dataclass(frozen=True)
class ConeDescription:
    degree: int
    forms: tuple[AffineForm, ...]
    inequalities: tuple[AffineIneq, ...]
    vertices: tuple[VietaVector, ...]
    is_lattice: bool


def _elementary(cs: Sequence[Fraction]) -> list[Fraction]:
    e = [Fraction(1)]
    for c in cs:
        e.append(Fraction(0))
        for k in range(len(e) - 1, 0, -1):
            e[k] += c * e[k - 1]
    return e


def vieta(cs: Sequence, degree: Optional[int] = None) -> VietaVector:
    """Elementary symmetric values ``e_1(cs)..e_m(cs)``."""
    cs = [to_fraction(c) for c in cs]
    d = 2 * len(cs) if degree is None else degree
    if d // 2 != len(cs):
        raise DegreeMismatch(f"{len(cs)} values of c do not fit degree {d}")
    return VietaVector(d, tuple(_elementary(cs)[1:]))


def vieta_from_cpoly(c_poly: Poly, degree: Optional[int] = None) -> VietaVector:
    """``v_l = (-1)^l`` times the coefficient of ``u^(m-l)`` in the monic c-polynomial."""
    cp = c_poly.monic()
    m = cp.degree
    d = 2 * m if degree is None else degree
    return VietaVector(d, tuple((-1) ** l * cp[m - l] for l in range(1, m + 1)))


def _vertex_basis(l: int, d: int) -> Poly:
    """Polynomial multiplying ``v_l``: ``(z^2+z)^(m-l)``, times ``2z+1`` for odd ``d``."""
    m = d // 2
    p = S ** (m - l)
    return LINEAR * p if d % 2 else p


@lru_cache(maxsize=None)
def hstar_linear_forms(d: int) -> tuple[AffineForm, ...]:
    """``h_i*`` of the monic CL-polynomial with Vieta vector ``v``, as affine forms, ``i = 0..d``."""
    if d < 1:
        raise ValueError("d must be positive")
    m = d // 2
    cols = [hstar_from_poly(_vertex_basis(l, d), degree=d).h for l in range(m + 1)]
    return tuple(
        AffineForm(tuple(cols[l][i] for l in range(1, m + 1)), cols[0][i]) for i in range(d + 1)
    )


def generate_inequalities(d: int) -> tuple[AffineIneq, ...]:
    """``h_i* >= 0`` for ``i = 0..floor(d/2)`` in primitive integer form."""
    if d < 2:
        raise ValueError("d must be at least 2")
    forms = hstar_linear_forms(d)
    return tuple(AffineIneq.primitive(f.normal, f.offset) for f in forms[: d // 2 + 1])


def prop42_closed_forms(d: int) -> tuple[AffineIneq, AffineIneq]:
    """Closed forms of the first two facets.

    (i) ``v_m >= 0``; (ii) ``-d v_m + sum_{l<m} 2^(m-l) v_l >= 0`` for even ``d``
    and ``-(d-2) v_m + sum_{l<m} 3 2^(m-l) v_l >= 0`` for odd ``d``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    m = d // 2
    first = AffineIneq.primitive([0] * (m - 1) + [1], 0)
    if d % 2 == 0:
        lead, factor = -d, 1
    else:
        lead, factor = -(d - 2), 3
    coeff = [factor * 2 ** (m - l) for l in range(m)]  # index 0 is the constant
    normal = coeff[1:] + [lead]
    return first, AffineIneq.primitive(normal, coeff[0])


def enumerate_vertices(d: int) -> tuple[VietaVector, ...]:
    """Vertices of the simplex, one per omitted facet (in facet order)."""
    ineqs = generate_inequalities(d)
    m = d // 2
    out = []
    for skip in range(m + 1):
        rows = [q for j, q in enumerate(ineqs) if j != skip]
        try:
            sol = solve([list(q.normal) for q in rows], [-q.offset for q in rows])
        except ArithmeticError as exc:
            raise SingularSubsystem(f"degree {d}: facets without #{skip} are dependent") from exc
        if sol is None:
            raise SingularSubsystem(f"degree {d}: facets without #{skip} are inconsistent")
        if ineqs[skip].value(sol) < 0:
            raise InvariantViolation(f"degree {d}: vertex opposite facet {skip} violates it")
        out.append(VietaVector(d, tuple(sol)))
    return tuple(out)


def lattice_check(vertices: Sequence[VietaVector]) -> bool:
    return all(v.is_integral() for v in vertices)


def describe_cone(d: int) -> ConeDescription:
    verts = enumerate_vertices(d)
    return ConeDescription(
        d, hstar_linear_forms(d), generate_inequalities(d), verts, lattice_check(verts)
    )


def vertex_poly(v: VietaVector) -> Poly:
    """``s^m + v_1 s^(m-1) + ... + v_m`` at ``s = z^2 + z``, times ``2z+1`` for odd degree."""
    full = v.full()
    m = len(v.v)
    sp = Poly([full[m - k] for k in range(m + 1)])
    p = sp.compose(S)
    return LINEAR * p if v.degree % 2 else p


@dataclass(frozen=True)
class VertexIdentity:
    degree: int
    matches: tuple[tuple[tuple[Fraction, ...], Optional[int]], ...]

    @property
    def bijection(self) -> bool:
        idx = [i for _, i in self.matches]
        return None not in idx and sorted(idx) == list(range(self.degree // 2 + 1))


def vertex_identity_check(d: int) -> VertexIdentity:
    """Match each vertex polynomial with a normalised palindromic basis element."""
    m = d // 2
    targets = [pal_basis(i, d).monic() for i in range(m + 1)]
    matches = []
    for v in enumerate_vertices(d):
        vp = vertex_poly(v).monic()
        hits = [i for i, t in enumerate(targets) if t == vp]
        matches.append((v.v, hits[0] if len(hits) == 1 else None))
    return VertexIdentity(d, tuple(matches))


def sufficient_condition_check(cs: Sequence, d: int) -> bool:
    """``c_i <= 2i + 2`` (odd ``d``) or ``c_i <= 2i + 1`` (even ``d``) for the sorted c-list."""
    cs = sorted(to_fraction(c) for c in cs)
    if d // 2 != len(cs):
        raise DegreeMismatch(f"{len(cs)} values of c do not fit degree {d}")
    extra = 2 if d % 2 else 1
    return all(c <= 2 * i + extra for i, c in enumerate(cs))


def in_region(v: VietaVector) -> bool:
    """Does ``v`` satisfy every generated facet inequality?"""
    return all(q.holds(v.v) for q in generate_inequalities(v.degree))


# -- bundled reference data -----------------------------------------------------

REFERENCE_DEGREES = range(4, 15)


def _degrees_digest(degrees: dict) -> str:
    blob = json.dumps(degrees, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@lru_cache(maxsize=1)
def load_reference() -> dict:
    raw = resources.files("clpoly").joinpath("data/reference_cones.json").read_text()
    data = json.loads(raw)
    if _degrees_digest(data["degrees"]) != data["sha256"]:
        raise InvariantViolation("reference data checksum mismatch")
    return data


@dataclass(frozen=True)
class AppendixComparison:
    degree: int
    inequalities_match: bool
    vertices_match: bool
    missing_inequalities: tuple[AffineIneq, ...]
    extra_inequalities: tuple[AffineIneq, ...]
    missing_vertices: tuple[tuple[int, ...], ...]
    extra_vertices: tuple[tuple, ...]

    @property
    def match(self) -> bool:
        return self.inequalities_match and self.vertices_match


def appendix_compare(d: int) -> AppendixComparison:
    """Generated facets (up to positive scaling, any order) and vertices (as sets) vs reference."""
    if d not in REFERENCE_DEGREES:
        raise MissingReference(f"no reference data for degree {d} (available: 4..14)")
    ref = load_reference()["degrees"][str(d)]
    ref_ineqs = {AffineIneq.primitive(q["normal"], q["offset"]) for q in ref["inequalities"]}
    ref_verts = {tuple(v) for v in ref["vertices"]}
    gen_ineqs = set(generate_inequalities(d))
    gen_verts = {v.v for v in enumerate_vertices(d)}
    gen_verts_int = {tuple(int(x) if x.denominator == 1 else x for x in v) for v in gen_verts}
    return AppendixComparison(
        d,
        ref_ineqs == gen_ineqs,
        ref_verts == gen_verts_int,
        tuple(sorted(ref_ineqs - gen_ineqs, key=lambda q: (q.normal, q.offset))),
        tuple(sorted(gen_ineqs - ref_ineqs, key=lambda q: (q.normal, q.offset))),
        tuple(sorted(ref_verts - gen_verts_int)),
        tuple(sorted(gen_verts_int - ref_verts, key=str)),
    )
