"""Exact sparse interpolation in monomial and generalized Chebyshev bases.

Root systems and Weyl groups (:mod:`wsi.rootsys`), orbit polynomials
(:mod:`wsi.orbitalg`), Chebyshev polynomials (:mod:`wsi.cheb`), exact linear
algebra (:mod:`wsi.linalg`), Hankel-based support recovery
(:mod:`wsi.supportrec`) and the interpolation drivers (:mod:`wsi.interp`).
"""
from .cheb import chebyshev_T, chebyshev_U, character_poly, format_poly
from .interp import (
    BlackBox,
    SparseRepresentation,
    XiConfig,
    first_kind_interpolate,
    interpolate,
    laurent_interpolate,
    second_kind_interpolate,
    verify_interpolant,
)
from .orbitalg import LaurentPoly, hypercross, orbit_poly, skew_orbit_poly, wcross
from .rootsys import RootSystem, make_root_system

__version__ = "0.1.0"

__all__ = [
    "BlackBox",
    "LaurentPoly",
    "RootSystem",
    "SparseRepresentation",
    "XiConfig",
    "character_poly",
    "chebyshev_T",
    "chebyshev_U",
    "first_kind_interpolate",
    "format_poly",
    "hypercross",
    "interpolate",
    "laurent_interpolate",
    "make_root_system",
    "orbit_poly",
    "second_kind_interpolate",
    "skew_orbit_poly",
    "verify_interpolant",
    "wcross",
]
