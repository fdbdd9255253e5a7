"""Exact matrix-valued orthogonal polynomials attached to (SU(2) x SU(2), diag)."""

from .scalars import ExactnessError, HalfInt, PiRat, QuadRat, SqrtRat, half
from .polynomials import LaurentPoly, Poly
from .matpoly import MatPoly
from .chebyshev import ChebExpansion, chebyshev_u
from .clebsch_gordan import DEFAULT_PRECISION_BITS
from .spherical import full_sf, full_sf_Q, restricted_sf, sf_pairing
from .weight import block_split, weight_W_monomial, weight_Z
from .core import MatrixWeight, block_polys, monic_polys, monic_polys_for, three_term_extract, weight_for
from .diffops import RHSDiffOp, example_ops, op_D, op_E
from .rodrigues import norms, recurrence_tables, rodrigues_P1, rodrigues_check
from .hypergeom import HypSeries, hyp_eval
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "ExactnessError", "HalfInt", "PiRat", "QuadRat", "SqrtRat", "half", "LaurentPoly", "Poly", "MatPoly", "ChebExpansion",
    "chebyshev_u", "DEFAULT_PRECISION_BITS", "full_sf", "full_sf_Q", "restricted_sf", "sf_pairing",
    "block_split", "weight_W_monomial", "weight_Z", "MatrixWeight", "block_polys", "monic_polys",
    "monic_polys_for", "three_term_extract", "weight_for", "RHSDiffOp", "example_ops", "op_D", "op_E",
    "norms", "recurrence_tables", "rodrigues_P1", "rodrigues_check", "HypSeries", "hyp_eval",
    "VerificationReport", "verify_all",
]
