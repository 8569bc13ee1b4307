"""Weil representation of su(2) on Hermite–Gaussian functions, exactly."""

from tate.lrh._core.weil.bmn import bmn_fn, w_basis
from tate.lrh._core.weil.checks import (
    GENERATORS,
    basis_indices,
    basis_roundtrip_check,
    character_laplacian_check,
    commutator_check,
    fourier_order_check,
    harmonic_oscillator_check,
    hermitian_product,
    inner_product,
    intertwining_check,
    irreducibility_check,
    ladder_check,
    ladder_expected,
    linearity_check,
    membership_check,
    oscillator_symmetry_check,
    rotation_eigen_check,
    skew_adjoint_check,
    subspace_invariance_check,
    subspace_orthogonality_check,
    w_coordinates,
)
from tate.lrh._core.weil.fourier import (
    fourier_quadrature_validate,
    fourier_transform,
    inverse_fourier_transform,
)
from tate.lrh._core.weil.generators import (
    SU2Generator,
    apply_generator,
    decompose_su2,
    harmonic_oscillator,
    matrix_bracket,
)
from tate.lrh._core.weil.hermgauss import (
    HermGaussFn,
    HermiteExpansion,
    expand_in_hermite,
    hermite_fn,
)

__all__ = [
    "GENERATORS",
    "HermGaussFn",
    "HermiteExpansion",
    "SU2Generator",
    "apply_generator",
    "basis_indices",
    "basis_roundtrip_check",
    "bmn_fn",
    "character_laplacian_check",
    "commutator_check",
    "decompose_su2",
    "expand_in_hermite",
    "fourier_order_check",
    "fourier_quadrature_validate",
    "fourier_transform",
    "harmonic_oscillator",
    "harmonic_oscillator_check",
    "hermite_fn",
    "hermitian_product",
    "inner_product",
    "intertwining_check",
    "inverse_fourier_transform",
    "irreducibility_check",
    "ladder_check",
    "ladder_expected",
    "linearity_check",
    "matrix_bracket",
    "membership_check",
    "oscillator_symmetry_check",
    "rotation_eigen_check",
    "skew_adjoint_check",
    "subspace_invariance_check",
    "subspace_orthogonality_check",
    "w_basis",
    "w_coordinates",
]
