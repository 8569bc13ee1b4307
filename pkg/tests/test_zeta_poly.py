"""
tatezeta — zeta polynomial tests
================================
Run with: python -m pytest tests/test_zeta_poly.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import json
from fractions import Fraction

import mpmath.ctx_mp
import pytest
import sympy as sp
from hypothesis import given, strategies as st

from tate.core.data_types import Route, ZetaPolyRecord
from tate.core.exceptions import DomainError, IdentityViolatedError
from tate.lrh._core.exact import UniPoly, nullspace, parse_rational
from tate.lrh._core.zeta import (
    angular_decompose,
    cos_power_expand,
    functional_equation_check,
    functional_equation_residual,
    hermite_poly,
    is_admissible,
    laguerre_poly,
    monomial_in_hermite,
    rising_factorial,
    shift_operator_matrix,
    symmetry_check,
    vanishing_law_check,
    zeta_poly,
    zeta_poly_expansion,
    zeta_poly_recurrence,
)

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden", "zeta_table.json")


def P(*coeffs, var="s"):
    return UniPoly.from_coeffs([Fraction(c) for c in coeffs], var)


def admissible_pairs(m_max):
    return [(m, k) for m in range(m_max + 1) for k in range(m + 1) if is_admissible(m, k)]


@pytest.fixture(scope="module")
def golden():
    with open(GOLDEN, encoding="utf-8") as fh:
        return json.load(fh)


# ── Orthogonal polynomials ────────────────────────────────────────────────────

class TestOrthoPoly:
    def test_low_hermite(self):
        assert hermite_poly(0) == P(1)
        assert hermite_poly(2) == P(-2, 0, 4)
        assert hermite_poly(3) == P(0, -12, 0, 8)
        assert hermite_poly(4) == P(12, 0, -48, 0, 16)

    @pytest.mark.parametrize("m", range(12))
    def test_hermite_matches_sympy(self, m):
        x = sp.Symbol("x")
        theirs = sp.Poly(sp.hermite(m, x), x).all_coeffs()[::-1]
        assert list(hermite_poly(m).coeffs) == [Fraction(int(c)) for c in theirs]

    @pytest.mark.parametrize("n,alpha", [(0, 0), (1, 0), (3, 2), (5, 1), (4, 4)])
    def test_laguerre_matches_sympy(self, n, alpha):
        x = sp.Symbol("x")
        theirs = sp.Poly(sp.assoc_laguerre(n, alpha, x), x).all_coeffs()[::-1]
        ours = laguerre_poly(n, alpha).coeffs
        assert list(ours) == [Fraction(int(c.p), int(c.q)) for c in theirs]

    def test_cos_power(self):
        assert cos_power_expand(3) == {1: Fraction(3, 4), 3: Fraction(1, 4)}
        assert cos_power_expand(4) == {0: Fraction(3, 8), 2: Fraction(1, 2), 4: Fraction(1, 8)}

    @pytest.mark.parametrize("n", range(9))
    def test_monomial_in_hermite(self, n):
        total = UniPoly.zero("x")
        for j, e in monomial_in_hermite(n).items():
            total = total + hermite_poly(j) * e
        assert total == UniPoly.monomial(n, 1, "x")

    def test_negative_degree_rejected(self):
        with pytest.raises(DomainError):
            hermite_poly(-1)


# ── Angular decomposition ─────────────────────────────────────────────────────

class TestAngular:
    def test_degree_three(self):
        dec = angular_decompose(3)
        assert dec.component(1) == P(-12, 6, var="w")
        assert dec.component(3) == P(2, var="w")
        assert dec.component(0).is_zero

    def test_degree_four(self):
        dec = angular_decompose(4)
        assert dec.component(0) == P(12, -24, 6, var="w")

    @pytest.mark.parametrize("m", [2, 5, 7])
    def test_numeric_reconstruction(self, m):
        mp = mpmath.ctx_mp.MPContext()
        mp.prec = 120
        h = hermite_poly(m)
        r, theta = mp.mpf("0.37"), mp.mpf("1.1")
        x = mp.sqrt(2 * mp.pi) * r * mp.cos(theta)
        direct = sum(mp.mpf(c.numerator) / c.denominator * x ** j for j, c in enumerate(h.coeffs))
        rebuilt = angular_decompose(m).evaluate(mp, r, theta)
        assert abs(direct - rebuilt) < mp.mpf(10) ** -30

    def test_components_have_matching_parity(self):
        for m in range(10):
            assert all((m - k) % 2 == 0 for k in angular_decompose(m).components)


# ── Construction ──────────────────────────────────────────────────────────────

class TestZetaPoly:
    @pytest.mark.parametrize("m,k,expected", [
        (0, 0, (1,)),
        (2, 0, (-1, 2)),
        (3, 1, (-1, 2)),
        (4, 0, (1, -2, 2)),
        (1, 1, (1,)),
    ])
    def test_golden_values(self, m, k, expected):
        for route in (Route.EXPANSION, Route.RECURRENCE):
            rec = zeta_poly(m, k, route)
            assert rec.coeffs == P(*expected)
            assert rec.degree == (m - k) // 2
            assert not rec.is_zero

    @pytest.mark.parametrize("m,k", [(3, 0), (2, 3), (5, 2), (0, 1)])
    def test_vacuous_pairs(self, m, k):
        rec = zeta_poly_expansion(m, k)
        assert rec.is_zero
        assert rec.coeffs.is_zero
        assert rec.degree == -1
        assert vanishing_law_check(rec)
        assert zeta_poly(m, k, Route.RECURRENCE).is_zero

    def test_recurrence_rejects_vacuous(self):
        with pytest.raises(DomainError):
            zeta_poly_recurrence(3, 0)

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            zeta_poly_expansion(-1, 0)

    def test_unknown_route_rejected(self):
        with pytest.raises(DomainError):
            zeta_poly(2, 0, "mellin")

    @pytest.mark.parametrize("m,k", admissible_pairs(24))
    def test_routes_agree(self, m, k):
        assert zeta_poly_expansion(m, k).coeffs == zeta_poly_recurrence(m, k).coeffs

    @pytest.mark.slow
    @pytest.mark.parametrize("m,k", [(m, k) for m, k in admissible_pairs(40) if m > 24])
    def test_routes_agree_up_to_forty(self, m, k):
        assert zeta_poly_expansion(m, k).coeffs == zeta_poly_recurrence(m, k).coeffs

    @pytest.mark.parametrize("m,k", admissible_pairs(24))
    def test_normalization(self, m, k):
        p = zeta_poly_expansion(m, k).coeffs
        assert p.leading > 0
        assert all(c.denominator == 1 for c in p.coeffs)
        assert p == p.primitive()

    def test_rising_factorial(self):
        s = UniPoly.identity("s")
        assert rising_factorial(s, 0) == P(1)
        assert rising_factorial(s, 3) == P(0, 2, 3, 1)

    def test_shift_matrix_is_triangular(self):
        t = shift_operator_matrix(2, 4)
        for i in range(5):
            assert t[i][i] == 2 + 2 * i + 1
            for j in range(i):
                assert t[i][j] == 0

    @pytest.mark.parametrize("m,k", [(6, 0), (7, 3), (10, 2)])
    def test_eigenvector_matches_sympy_nullspace(self, m, k):
        d = (m - k) // 2
        t = shift_operator_matrix(k, d)
        shifted = sp.Matrix(t) - (m + 1) * sp.eye(d + 1)
        theirs = shifted.nullspace()
        ours = nullspace([[t[i][j] - (m + 1 if i == j else 0) for j in range(d + 1)] for i in range(d + 1)])
        assert len(theirs) == len(ours) == 1

    def test_golden_file(self, golden):
        for row in golden:
            rec = zeta_poly_expansion(row["m"], row["k"])
            assert rec.degree == row["degree"]
            assert [parse_rational(c) for c in row["coeffs"]] == list(rec.coeffs.coeffs)


# ── Identities ────────────────────────────────────────────────────────────────

class TestIdentities:
    @pytest.mark.parametrize("m,k", admissible_pairs(30))
    def test_functional_equation(self, m, k):
        assert functional_equation_check(zeta_poly_expansion(m, k))

    @pytest.mark.parametrize("m,k", admissible_pairs(30))
    def test_symmetry(self, m, k):
        assert symmetry_check(zeta_poly_expansion(m, k))

    @pytest.mark.slow
    @pytest.mark.parametrize("m,k", [(m, k) for m, k in admissible_pairs(40) if m > 30])
    def test_identities_up_to_forty(self, m, k):
        rec = zeta_poly_expansion(m, k)
        assert functional_equation_check(rec)
        assert symmetry_check(rec)

    def test_corrupted_polynomial_fails_functional_equation(self):
        rec = zeta_poly_expansion(4, 0)
        bad = ZetaPolyRecord(m=4, k=0, degree=2, coeffs=rec.coeffs + 1, route=rec.route)
        assert not functional_equation_residual(bad).is_zero
        with pytest.raises(IdentityViolatedError) as err:
            functional_equation_check(bad)
        assert "residual" in err.value.details

    def test_corrupted_polynomial_fails_symmetry(self):
        bad = ZetaPolyRecord(m=2, k=0, degree=1, coeffs=P(0, 1), route=Route.EXPANSION)
        with pytest.raises(IdentityViolatedError):
            symmetry_check(bad)

    def test_vanishing_law_catches_wrong_degree(self):
        bad = ZetaPolyRecord(m=4, k=0, degree=2, coeffs=P(1, 1), route=Route.EXPANSION)
        with pytest.raises(IdentityViolatedError):
            vanishing_law_check(bad)

    def test_identities_need_nonzero_record(self):
        with pytest.raises(DomainError):
            symmetry_check(zeta_poly_expansion(3, 0))

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_vanishing_law_everywhere(self, m, k):
        rec = zeta_poly_expansion(m, k)
        assert vanishing_law_check(rec)
        assert rec.is_zero == (k > m or (m - k) % 2 == 1)
