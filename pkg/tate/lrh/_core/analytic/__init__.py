"""High-precision numerics: Gamma, quadrature, the zeta integral, orthogonality, roots."""

from tate.lrh._core.analytic.context import DEFAULT_PRECISION_BITS, NumericContext
from tate.lrh._core.analytic.gamma import gamma_complex, ortho_weight
from tate.lrh._core.analytic.orthogonality import (
    orthogonality_check,
    orthogonality_ratio,
    weight_moments,
    weighted_inner,
)
from tate.lrh._core.analytic.quadrature import integrate
from tate.lrh._core.analytic.roots import real_root_count, root_find
from tate.lrh._core.analytic.zeta_numeric import (
    angular_coefficient,
    functional_equation_numeric,
    gamma_pi_factor,
    radial_coefficients,
    ratio_spread,
    zeta_closed_form,
    zeta_mk,
    zeta_numeric,
    zeta_ratio_scan,
)

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "NumericContext",
    "angular_coefficient",
    "functional_equation_numeric",
    "gamma_complex",
    "gamma_pi_factor",
    "integrate",
    "ortho_weight",
    "orthogonality_check",
    "orthogonality_ratio",
    "radial_coefficients",
    "ratio_spread",
    "real_root_count",
    "root_find",
    "weight_moments",
    "weighted_inner",
    "zeta_closed_form",
    "zeta_mk",
    "zeta_numeric",
    "zeta_ratio_scan",
]
