"""
tatezeta — numeric layer tests
==============================
Run with: python -m pytest tests/test_analytic.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import pytest

from tate.core.exceptions import (
    ConfigError,
    DomainError,
    IdentityViolatedError,
    NonConvergentError,
    PoleProximityError,
)
from tate.lrh._core.analytic import (
    NumericContext,
    angular_coefficient,
    functional_equation_numeric,
    gamma_complex,
    integrate,
    ortho_weight,
    orthogonality_check,
    orthogonality_ratio,
    radial_coefficients,
    ratio_spread,
    real_root_count,
    root_find,
    weight_moments,
    weighted_inner,
    zeta_closed_form,
    zeta_mk,
    zeta_numeric,
    zeta_ratio_scan,
)
from tate.lrh._core.exact import UniPoly
from tate.lrh._core.weil import bmn_fn, hermite_fn
from tate.lrh._core.zeta import zeta_poly_expansion

SAMPLES = [0.75, 1.0, complex(1.5, 0.5), complex(2.0, -1.0), complex(3.0, 2.0)]


@pytest.fixture(scope="module")
def nctx():
    return NumericContext(128)


def P(*coeffs, var="s"):
    return UniPoly.from_coeffs([Fraction(c) for c in coeffs], var)


# ── Context ───────────────────────────────────────────────────────────────────

class TestContext:
    def test_low_precision_rejected(self):
        with pytest.raises(ConfigError):
            NumericContext(32)

    def test_contexts_are_independent(self):
        a, b = NumericContext(64), NumericContext(256)
        assert a.mp.prec == 64
        assert b.mp.prec == 256

    def test_parse(self, nctx):
        assert nctx.parse(Fraction(1, 2)) == nctx.mp.mpf(0.5)
        assert nctx.parse(complex(1, 2)) == nctx.mp.mpc(1, 2)
        assert nctx.parse("0.25") == nctx.mp.mpf(0.25)

    def test_eval_poly(self, nctx):
        assert nctx.eval_poly(P(1, -2, 2), 2) == 5


# ── Gamma ─────────────────────────────────────────────────────────────────────

class TestGamma:
    def test_half(self, nctx):
        mp = nctx.mp
        assert abs(gamma_complex(nctx, Fraction(1, 2)) - mp.sqrt(mp.pi)) < mp.mpf(10) ** -35

    def test_reflection_formula(self, nctx):
        mp = nctx.mp
        s = mp.mpc("0.3", "1.7")
        product = gamma_complex(nctx, s) * gamma_complex(nctx, 1 - s)
        assert abs(product - mp.pi / mp.sin(mp.pi * s)) < mp.mpf(10) ** -30

    @pytest.mark.parametrize("pole", [0, -1, -7])
    def test_pole_proximity(self, nctx, pole):
        with pytest.raises(PoleProximityError):
            gamma_complex(nctx, pole)

    def test_near_but_not_at_pole(self, nctx):
        assert gamma_complex(nctx, nctx.mp.mpf(-1) + nctx.mp.mpf(10) ** -10) != 0

    @pytest.mark.parametrize("k", range(5))
    @pytest.mark.parametrize("t", ["0", "0.3", "2.5"])
    def test_ortho_weight_closed_form(self, nctx, k, t):
        mp = nctx.mp
        z = mp.mpc(mp.mpf(k + 1) / 2, mp.mpf(t))
        direct = abs(mp.gamma(z)) ** 2
        assert abs(ortho_weight(nctx, k, t) - direct) < mp.mpf(10) ** -30 * max(1, direct)


# ── Quadrature ────────────────────────────────────────────────────────────────

class TestQuadrature:
    def test_gaussian(self, nctx):
        mp = nctx.mp
        result = integrate(nctx, lambda x: mp.exp(-x * x), [-mp.inf, 0, mp.inf], tol=1e-30)
        assert abs(result.value - mp.sqrt(mp.pi)) < mp.mpf(10) ** -30
        assert result.evaluations > 0
        assert result.error_estimate >= 0

    def test_budget_exceeded(self, nctx):
        mp = nctx.mp
        with pytest.raises(NonConvergentError):
            integrate(nctx, lambda x: mp.sin(1 / x), [0, 1], tol=1e-30, max_degree=3)


# ── Zeta integral ─────────────────────────────────────────────────────────────

class TestZetaIntegral:
    def test_angular_coefficient_trivial(self):
        assert angular_coefficient(0, 0, 0) == 1
        assert angular_coefficient(0, 0, 1) == 0

    def test_angular_coefficient_cos_squared(self):
        # (1/2π) ∫ cos²θ dθ = 1/2, (1/2π) ∫ cos²θ e^{2iθ} dθ = 1/4
        assert angular_coefficient(2, 0, 0) == Fraction(1, 2)
        assert angular_coefficient(2, 0, 2) == Fraction(1, 4)

    def test_radial_coefficients_vanish_off_parity(self):
        assert radial_coefficients(hermite_fn(3, 0), 0) == {}

    def test_ground_state_value(self, nctx):
        # ζ(s, 1, f_00) = ∫ e^{-π|z|²} |z|^{2s-2} dz = π^{1-s} Γ(s)
        mp = nctx.mp
        s = mp.mpf(1)
        result = zeta_numeric(nctx, hermite_fn(0, 0), 0, s)
        assert abs(result.value - 1) < mp.mpf(10) ** -25

    @pytest.mark.parametrize("s", SAMPLES)
    def test_quadrature_matches_closed_form(self, nctx, s):
        f = hermite_fn(4, 0)
        numeric = zeta_numeric(nctx, f, 0, s).value
        closed = zeta_closed_form(nctx, f, 0, s)
        assert abs(numeric - closed) <= 1e-22 * max(1, abs(closed))

    def test_vacuous_character_is_exact_zero(self, nctx):
        result = zeta_numeric(nctx, hermite_fn(3, 0), 0, 1)
        assert result.value == 0
        assert result.evaluations == 0

    def test_left_half_plane_rejected(self, nctx):
        with pytest.raises(DomainError):
            zeta_numeric(nctx, hermite_fn(0, 0), 0, -0.5)

    def test_twist_is_a_shift(self, nctx):
        mp = nctx.mp
        f = hermite_fn(3, 0)
        s, alpha = mp.mpf("1.2"), mp.mpf("0.7")
        twisted = zeta_numeric(nctx, f, 1, s, alpha=alpha).value
        shifted = zeta_closed_form(nctx, f, 1, s + mp.mpc(0, 1) * alpha / 2)
        assert abs(twisted - shifted) <= 1e-22 * max(1, abs(shifted))

    @pytest.mark.parametrize("m,k", [(2, 0), (4, 0), (3, 1), (5, 3), (6, 2)])
    def test_ratio_is_constant(self, nctx, m, k):
        ratios = zeta_ratio_scan(nctx, hermite_fn(m, 0), m, k, SAMPLES)
        assert ratio_spread(ratios) < 1e-8

    @pytest.mark.parametrize("k", [0, 2, 4])
    def test_ratio_constant_on_rotation_basis(self, nctx, k):
        # e^{ikθ} pairs with the e^{-ikθ} component b_{4,-k}
        ratios = zeta_ratio_scan(nctx, bmn_fn(4, -k), 4, k, SAMPLES[:3])
        assert ratio_spread(ratios) < 1e-8

    def test_ratio_scan_rejects_vacuous(self, nctx):
        with pytest.raises(DomainError):
            zeta_ratio_scan(nctx, hermite_fn(3, 0), 3, 0, SAMPLES)

    def test_ratio_scan_rejects_zero_sample(self, nctx):
        with pytest.raises(DomainError):
            zeta_ratio_scan(nctx, hermite_fn(2, 0), 2, 0, [Fraction(1, 2)])

    def test_zeta_mk_zero_for_vacuous(self, nctx):
        assert zeta_mk(nctx, 3, 0, 1) == 0

    @pytest.mark.parametrize("m,k", [(2, 0), (4, 2), (7, 1), (8, 0)])
    def test_functional_equation_numeric(self, nctx, m, k):
        assert functional_equation_numeric(nctx, m, k, complex(0.3, 2.0)) < 1e-20

    def test_spread_of_single_ratio(self):
        assert ratio_spread([1]) == 0.0


# ── Orthogonality ─────────────────────────────────────────────────────────────

class TestOrthogonality:
    def test_mass_of_weights(self, nctx):
        mp = nctx.mp
        assert abs(weight_moments(nctx, 0, 1)[0] - mp.pi) < mp.mpf(10) ** -22
        assert abs(weight_moments(nctx, 1, 1)[0] - mp.pi / 2) < mp.mpf(10) ** -22

    def test_odd_moments_vanish(self, nctx):
        moments = weight_moments(nctx, 2, 6)
        assert moments[1] == moments[3] == moments[5] == 0

    def test_moments_live_on_their_context(self):
        fresh = NumericContext(128)
        weight_moments(fresh, 0, 4)
        assert len(fresh.moment_cache[0]) == 4
        assert NumericContext(128).moment_cache == {}

    def test_moment_cache_extends_in_place(self):
        fresh = NumericContext(160)
        first = weight_moments(fresh, 1, 2)
        longer = weight_moments(fresh, 1, 6)
        assert longer[:2] == first
        assert len(fresh.moment_cache[1]) == 6
        assert list(fresh.moment_cache) == [1]

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_pairs(self, nctx, k):
        ms = [m for m in range(k, 11, 2)]
        for i, m in enumerate(ms):
            for m2 in ms[i + 1:]:
                assert orthogonality_check(nctx, m, m2, k)
                assert orthogonality_ratio(nctx, m, m2, k) < 1e-10

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_pairs_up_to_sixteen(self, nctx, k):
        ms = list(range(k, 17, 2))
        for i, m in enumerate(ms):
            for m2 in ms[i + 1:]:
                assert orthogonality_check(nctx, m, m2, k)

    def test_diagonal_positive(self, nctx):
        assert orthogonality_check(nctx, 4, 4, 0)

    def test_non_orthogonal_polynomials_detected(self, nctx):
        t = UniPoly.identity("t")
        assert weighted_inner(nctx, t * t, UniPoly.constant(1, "t"), 0) > 0

    def test_vacuous_rejected(self, nctx):
        with pytest.raises(DomainError):
            orthogonality_check(nctx, 3, 4, 0)

    def test_failure_reports_residual(self, nctx, monkeypatch):
        from tate.lrh._core.analytic import orthogonality as ortho

        monkeypatch.setattr(ortho, "critical_restriction", lambda m, k: UniPoly.from_coeffs([1, 0, 1], "t"))
        with pytest.raises(IdentityViolatedError) as err:
            ortho.orthogonality_check(nctx, 2, 4, 0)
        assert "residual" in err.value.details


# ── Roots ─────────────────────────────────────────────────────────────────────

class TestRoots:
    def test_quadratic(self, nctx):
        mp = nctx.mp
        roots = root_find(nctx, P(1, -2, 2))
        assert len(roots) == 2
        for z, residual in roots:
            assert abs(mp.re(z) - mp.mpf(0.5)) < mp.mpf(10) ** -30
            assert abs(abs(mp.im(z)) - mp.mpf(0.5)) < mp.mpf(10) ** -30
            assert residual < 1e-25

    @pytest.mark.parametrize("m,k", [(10, 0), (20, 2), (31, 1)])
    def test_zeta_roots_on_critical_line(self, nctx, m, k):
        p = zeta_poly_expansion(m, k).coeffs
        for z, _ in root_find(nctx, p):
            assert abs(nctx.mp.re(z) - nctx.mp.mpf(0.5)) < 1e-20

    def test_double_root_refined(self, nctx):
        roots = root_find(nctx, P(1, -2, 1), tol=1e-15)
        assert all(abs(z - 1) < 1e-15 for z, _ in roots)

    def test_complex_coefficients(self, nctx):
        from tate.lrh._core.exact import I
        roots = root_find(nctx, UniPoly.from_coeffs([-I, 1]))
        assert abs(roots[0][0] - nctx.mp.mpc(0, 1)) < 1e-30

    def test_constant_rejected(self, nctx):
        with pytest.raises(DomainError):
            root_find(nctx, P(3))

    def test_real_root_count(self, nctx):
        assert real_root_count(nctx, P(-1, 0, 1, var="t")) == 2
        assert real_root_count(nctx, P(1, 0, 1, var="t")) == 0
