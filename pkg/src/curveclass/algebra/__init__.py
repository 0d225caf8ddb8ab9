"""Exact polynomial algebra: binary forms, minors, resultants."""

from .forms import (
    BinaryForm,
    PolyVector,
    derivative_t,
    gcd,
    normalize_point,
    rational_roots,
    valuation,
)
from .linalg import determinant, generic_rank, minors, nullspace, rank, wedge
from .multivariate import MPoly, resultant

__all__ = [
    "BinaryForm",
    "MPoly",
    "PolyVector",
    "derivative_t",
    "determinant",
    "gcd",
    "generic_rank",
    "minors",
    "normalize_point",
    "nullspace",
    "rank",
    "rational_roots",
    "resultant",
    "valuation",
    "wedge",
]
