"""Exact integer linear algebra and univariate polynomials."""

from .matrix import (
    annihilates,
    as_int_matrix,
    char_poly,
    det,
    identity,
    inverse_exact,
    inverse_integral,
    is_diagonalizable,
    mat_mul,
    min_poly,
    trace,
)
from .poly import (
    IntPoly,
    irreducible_mod2,
    is_squarefree,
    poly_gcd,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
    strip_pm1_factors,
    sturm_real_root_count,
)

__all__ = [
    "IntPoly",
    "annihilates",
    "as_int_matrix",
    "char_poly",
    "det",
    "identity",
    "inverse_exact",
    "inverse_integral",
    "irreducible_mod2",
    "is_diagonalizable",
    "is_squarefree",
    "mat_mul",
    "min_poly",
    "poly_gcd",
    "rational_roots",
    "squarefree_decomposition",
    "squarefree_part",
    "strip_pm1_factors",
    "sturm_real_root_count",
    "trace",
]
