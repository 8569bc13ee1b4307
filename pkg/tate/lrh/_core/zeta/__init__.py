"""Zeta polynomials p_m^(k): orthogonal polynomials, angular decomposition, both construction routes."""

from tate.lrh._core.zeta.angular import AngularDecomposition, angular_decompose
from tate.lrh._core.zeta.orthopoly import (
    cos_power_expand,
    hermite_poly,
    laguerre_poly,
    monomial_in_hermite,
)
from tate.lrh._core.zeta.zeta_poly import (
    functional_equation_check,
    functional_equation_residual,
    is_admissible,
    rising_factorial,
    shift_operator_matrix,
    symmetry_check,
    vanishing_law_check,
    zero_record,
    zeta_poly,
    zeta_poly_expansion,
    zeta_poly_recurrence,
)

__all__ = [
    "AngularDecomposition",
    "angular_decompose",
    "cos_power_expand",
    "functional_equation_check",
    "functional_equation_residual",
    "hermite_poly",
    "is_admissible",
    "laguerre_poly",
    "monomial_in_hermite",
    "rising_factorial",
    "shift_operator_matrix",
    "symmetry_check",
    "vanishing_law_check",
    "zero_record",
    "zeta_poly",
    "zeta_poly_expansion",
    "zeta_poly_recurrence",
]
