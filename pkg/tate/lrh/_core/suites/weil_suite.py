"""
tate.lrh._core.suites.weil_suite
================================
Every exact identity of the su(2) action on the Hermite–Gaussian basis up
to a total degree bound.
"""

from __future__ import annotations

from itertools import product

from tate.core.base_suite import BaseSuite
from tate.core.data_types import SuiteResult
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.weil.bmn import bmn_fn, w_basis
from tate.lrh._core.weil.checks import (
    GENERATORS,
    basis_indices,
    basis_roundtrip_check,
    character_laplacian_check,
    commutator_check,
    fourier_order_check,
    harmonic_oscillator_check,
    intertwining_check,
    irreducibility_check,
    ladder_check,
    membership_check,
    oscillator_symmetry_check,
    rotation_eigen_check,
    skew_adjoint_check,
    subspace_invariance_check,
    subspace_orthogonality_check,
)
from tate.lrh._core.weil.fourier import fourier_quadrature_validate
from tate.lrh._core.weil.hermgauss import hermite_fn

CHARACTER_K_VALUES = (0, 1, 2, 3)


class WeilSuite(BaseSuite):
    """Ladder, bracket, intertwining, eigenbasis, invariance and pairing identities."""

    suite_name    = "weil"
    suite_version = "1.0.0"
    depends_on    = []
    log_operation = "weil_check"

    def _execute(self, result: SuiteResult) -> None:
        bound = self._config.degree_bound
        pairing = self._config.pairing_bound
        pair_bound = bound if pairing is None else min(bound, pairing)
        check = self._check

        for m, n in basis_indices(bound):
            subject = {"m": m, "n": n}
            check(result, "ladder", subject, ladder_check, m, n)
            check(result, "harmonic_oscillator", subject, harmonic_oscillator_check, m, n)
            check(result, "basis_roundtrip", subject, basis_roundtrip_check, hermite_fn(m, n))
            check(result, "fourier_order", subject, fourier_order_check, hermite_fn(m, n))

        for x, y in product(GENERATORS, repeat=2):
            check(result, "commutator", f"[{x.value},{y.value}]", commutator_check, x, y, bound)

        check(result, "intertwining", {"degree_bound": bound}, intertwining_check, bound)

        for m in range(bound + 1):
            check(result, "invariance", {"m": m}, subspace_invariance_check, m)
            check(result, "irreducibility", {"m": m}, irreducibility_check, m)
            for n in w_basis(m):
                subject = {"m": m, "n": n}
                check(result, "rotation_eigen", subject, rotation_eigen_check, m, n)
                check(result, "membership", subject, membership_check, m, n)
                check(result, "fourier_order", subject, fourier_order_check, bmn_fn(m, n))

        for m in range(pair_bound + 1):
            for m2 in range(m + 1, pair_bound + 1):
                check(result, "subspace_orthogonality", {"m": m, "m2": m2},
                      subspace_orthogonality_check, m, m2)
        for x in GENERATORS:
            check(result, "skew_adjoint", x.value, skew_adjoint_check, x, pair_bound)
        check(result, "oscillator_symmetry", {"degree_bound": pair_bound},
              oscillator_symmetry_check, pair_bound)

        for k in CHARACTER_K_VALUES:
            check(result, "character_laplacian", {"k": k}, character_laplacian_check, k)

        if self._config.fourier_validate:
            nctx = NumericContext(self._config.precision_bits)
            check(result, "fourier_quadrature", "f_{0,0}..f_{1,1}", fourier_quadrature_validate,
                  nctx, tol=self._config.tolerance("fourier"))

        result.details = {
            "degree_bound":   bound,
            "basis_size":     (bound + 1) * (bound + 2) // 2,
            "pairing_bound":  pair_bound,
        }
