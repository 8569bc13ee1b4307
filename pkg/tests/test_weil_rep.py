"""
tatezeta — Weil representation tests
====================================
Run with: python -m pytest tests/test_weil_rep.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import mpmath.ctx_mp
import pytest
from hypothesis import given, settings, strategies as st

from tate.core.exceptions import DomainError, IdentityViolatedError
from tate.lrh._core.exact import GaussianRational, I
from tate.lrh._core.weil import (
    GENERATORS,
    HermGaussFn,
    HermiteExpansion,
    SU2Generator,
    apply_generator,
    basis_indices,
    basis_roundtrip_check,
    bmn_fn,
    character_laplacian_check,
    commutator_check,
    decompose_su2,
    expand_in_hermite,
    fourier_order_check,
    fourier_quadrature_validate,
    fourier_transform,
    harmonic_oscillator,
    harmonic_oscillator_check,
    hermitian_product,
    hermite_fn,
    inner_product,
    intertwining_check,
    inverse_fourier_transform,
    irreducibility_check,
    ladder_check,
    ladder_expected,
    linearity_check,
    matrix_bracket,
    membership_check,
    oscillator_symmetry_check,
    rotation_eigen_check,
    skew_adjoint_check,
    subspace_invariance_check,
    subspace_orthogonality_check,
    w_basis,
    w_coordinates,
)
from tate.lrh._core.weil.generators import apply_combination

J, K, R = SU2Generator.J, SU2Generator.K, SU2Generator.R


# ── Fixtures and strategies ───────────────────────────────────────────────────

@pytest.fixture(scope="module")
def ctx():
    c = mpmath.ctx_mp.MPContext()
    c.prec = 128
    return c


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gaussians = st.builds(GaussianRational, rationals, rationals)
indices = st.tuples(st.integers(0, 5), st.integers(0, 5))
functions = st.dictionaries(indices, gaussians, max_size=4).map(HermGaussFn)


# ── Hermite–Gaussian arithmetic ───────────────────────────────────────────────

class TestHermGauss:
    def test_hermite_fn_terms(self):
        f = hermite_fn(2, 1)
        assert f == HermGaussFn({(2, 1): 8, (0, 1): -4})

    def test_expansion_of_basis_function(self):
        assert expand_in_hermite(hermite_fn(3, 2)) == HermiteExpansion({(3, 2): 1})

    def test_weighted_derivative(self):
        assert HermGaussFn.monomial(0, 0).d_u() == HermGaussFn({(1, 0): -1})

    def test_total_degree(self):
        assert hermite_fn(4, 3).total_degree == 7
        assert HermGaussFn.zero().total_degree == -1

    @given(functions)
    def test_roundtrip(self, f):
        assert basis_roundtrip_check(f)

    @given(functions)
    def test_reflect_is_involution(self, f):
        assert f.reflect().reflect() == f

    def test_evaluate_matches_definition(self, ctx):
        f = hermite_fn(1, 2)
        x, y = ctx.mpf("0.3"), ctx.mpf("-0.2")
        s = ctx.sqrt(2 * ctx.pi)
        direct = ctx.hermite(1, s * x) * ctx.hermite(2, s * y) * ctx.exp(-ctx.pi * (x * x + y * y))
        assert abs(f.evaluate(ctx, x, y) - direct) < ctx.mpf(10) ** -30


# ── Ladder identities ─────────────────────────────────────────────────────────

class TestLadder:
    @pytest.mark.parametrize("m,n", list(basis_indices(12)))
    def test_ladder_on_every_basis_function(self, m, n):
        assert ladder_check(m, n)

    def test_basis_count(self):
        assert len(list(basis_indices(12))) == 91

    def test_k_kills_ground_state(self):
        assert apply_generator(K, hermite_fn(0, 0)).is_zero

    def test_j_eigenvalue(self):
        assert ladder_expected(J, 3, 1) == HermiteExpansion({(3, 1): 2 * I})

    def test_r_on_f10(self):
        assert apply_generator(R, hermite_fn(1, 0)) == -hermite_fn(0, 1)

    def test_k_on_f11(self):
        got = expand_in_hermite(apply_generator(K, hermite_fn(1, 1)))
        assert got == HermiteExpansion({(2, 0): -I, (0, 2): -I})

    def test_rejects_non_generator(self):
        with pytest.raises(DomainError):
            apply_generator("J", hermite_fn(0, 0))

    @settings(max_examples=40)
    @given(functions, functions, rationals, rationals)
    def test_linearity(self, f, g, alpha, beta):
        for x in GENERATORS:
            assert linearity_check(x, f, g, alpha, beta)


# ── Brackets ──────────────────────────────────────────────────────────────────

class TestBrackets:
    def test_matrix_brackets(self):
        assert decompose_su2(matrix_bracket(R, J)) == {R: 0, J: 0, K: 2}
        assert decompose_su2(matrix_bracket(J, K)) == {R: 2, J: 0, K: 0}
        assert decompose_su2(matrix_bracket(K, R)) == {R: 0, J: 2, K: 0}

    def test_decompose_rejects_non_su2(self):
        with pytest.raises(DomainError):
            decompose_su2(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))

    @pytest.mark.parametrize("x", GENERATORS)
    @pytest.mark.parametrize("y", GENERATORS)
    def test_commutators(self, x, y):
        assert commutator_check(x, y, 8)

    @pytest.mark.slow
    @pytest.mark.parametrize("x", GENERATORS)
    @pytest.mark.parametrize("y", GENERATORS)
    def test_commutators_at_degree_twelve(self, x, y):
        assert commutator_check(x, y, 12)

    def test_combination_is_linear_in_coordinates(self):
        f = hermite_fn(2, 1)
        combo = apply_combination({R: Fraction(1), J: Fraction(2)}, f)
        assert combo == apply_generator(R, f) + apply_generator(J, f) * 2


# ── Fourier transform ─────────────────────────────────────────────────────────

class TestFourier:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (0, 1), (3, 1), (2, 5)])
    def test_eigenvalue(self, m, n):
        f = hermite_fn(m, n)
        assert fourier_transform(f) == f * (I ** (m - n) if m >= n else (-I) ** (n - m))

    @given(functions)
    def test_inverse(self, f):
        assert inverse_fourier_transform(fourier_transform(f)) == f

    @given(functions)
    def test_order_four(self, f):
        assert fourier_order_check(f)

    def test_intertwining(self):
        assert intertwining_check(8)

    @pytest.mark.slow
    def test_intertwining_at_degree_twelve(self):
        assert intertwining_check(12)

    def test_quadrature_validation(self, ctx):
        errors = fourier_quadrature_validate(ctx, orders=((0, 0), (2, 1)), points=((0.3, -0.2),))
        assert len(errors) == 2
        assert max(errors) < 1e-20


# ── W_m and the b-basis ───────────────────────────────────────────────────────

class TestSubspaces:
    @pytest.mark.parametrize("m", range(9))
    def test_rotation_eigen_and_membership(self, m):
        for n in w_basis(m):
            assert rotation_eigen_check(m, n)
            assert membership_check(m, n)

    def test_w_basis(self):
        assert list(w_basis(3)) == [-3, -1, 1, 3]

    @pytest.mark.parametrize("m,n", [(2, 1), (3, 4), (-1, 0)])
    def test_bmn_domain(self, m, n):
        with pytest.raises(DomainError):
            bmn_fn(m, n)

    def test_b00_is_ground_state(self):
        assert bmn_fn(0, 0) == hermite_fn(0, 0)

    @pytest.mark.parametrize("m", range(9))
    def test_invariance(self, m):
        assert subspace_invariance_check(m)

    @pytest.mark.parametrize("m", range(7))
    def test_irreducibility(self, m):
        assert irreducibility_check(m)

    @pytest.mark.slow
    @pytest.mark.parametrize("m", range(9, 13))
    def test_rotation_and_invariance_up_to_twelve(self, m):
        for n in w_basis(m):
            assert rotation_eigen_check(m, n)
            assert membership_check(m, n)
        assert subspace_invariance_check(m)

    def test_w_coordinates_rejects_outside(self):
        with pytest.raises(IdentityViolatedError):
            w_coordinates(hermite_fn(2, 0) + hermite_fn(0, 0), 2)

    @pytest.mark.parametrize("m,m2", [(0, 2), (1, 3), (2, 4), (3, 6)])
    def test_subspace_orthogonality(self, m, m2):
        assert subspace_orthogonality_check(m, m2)

    def test_subspace_orthogonality_needs_distinct(self):
        with pytest.raises(DomainError):
            subspace_orthogonality_check(2, 2)


# ── Pairings and the oscillator ───────────────────────────────────────────────

class TestPairings:
    def test_ground_state_norm(self):
        assert inner_product(hermite_fn(0, 0), hermite_fn(0, 0)) == Fraction(1, 2)

    def test_hermite_functions_orthogonal(self):
        assert inner_product(hermite_fn(2, 0), hermite_fn(0, 2)) == 0
        assert inner_product(hermite_fn(1, 0), hermite_fn(1, 0)) == 1

    def test_hermitian_product_is_positive(self):
        f = hermite_fn(1, 0) + hermite_fn(0, 1) * I
        value = hermitian_product(f, f)
        assert value > 0

    @pytest.mark.parametrize("x", GENERATORS)
    def test_skew_adjoint(self, x):
        assert skew_adjoint_check(x, 5)

    @pytest.mark.parametrize("m,n", list(basis_indices(6)))
    def test_oscillator_eigenrelation(self, m, n):
        assert harmonic_oscillator_check(m, n)

    def test_oscillator_symmetry(self):
        assert oscillator_symmetry_check(5)

    @pytest.mark.slow
    @pytest.mark.parametrize("x", GENERATORS)
    def test_skew_adjoint_at_degree_twelve(self, x):
        assert skew_adjoint_check(x, 12)

    @pytest.mark.slow
    def test_oscillator_at_degree_twelve(self):
        assert all(harmonic_oscillator_check(m, n) for m, n in basis_indices(12))
        assert oscillator_symmetry_check(12)

    def test_oscillator_ground_state(self):
        f = hermite_fn(0, 0)
        assert harmonic_oscillator(f) == f

    @pytest.mark.parametrize("k", range(4))
    def test_character_laplacian(self, k):
        assert character_laplacian_check(k)
