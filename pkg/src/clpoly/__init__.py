"""Exact tools for polynomials whose roots lie on the line Re(z) = -1/2."""
from __future__ import annotations

__version__ = "0.1.0"

from .cl import CLForm, NotCL, cl_detect, cl_from_cs, cl_roots, max_imag_part, s_decompose
from .hstar import (
    HStarVector,
    diamond_check,
    hibi_check,
    hstar_from_poly,
    mult_linear_update,
    mult_quadratic_update,
    poly_from_hstar,
)
from .poly import Poly, parse_rational

__all__ = [
    "CLForm",
    "HStarVector",
    "NotCL",
    "Poly",
    "__version__",
    "cl_detect",
    "cl_from_cs",
    "cl_roots",
    "diamond_check",
    "hibi_check",
    "hstar_from_poly",
    "max_imag_part",
    "mult_linear_update",
    "mult_quadratic_update",
    "parse_rational",
    "poly_from_hstar",
    "s_decompose",
]
