"""
tatezeta — exact arithmetic tests
=================================
Run with: python -m pytest tests/test_exact_core.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from tate.core.exceptions import DomainError, EndpointRootError, NonRealRestrictionError
from tate.lrh._core.analytic import NumericContext, real_root_count
from tate.lrh._core.exact import (
    EchelonBasis,
    GaussianRational,
    I,
    UniPoly,
    cauchy_root_bound,
    coerce,
    count_real_roots,
    critical_line_lift,
    critical_line_restriction,
    format_rational,
    i_power,
    nullspace,
    parse_rational,
    poly_gcd,
    poly_shift,
    rank,
    squarefree_check,
    sturm_count,
)


# ── Strategies ────────────────────────────────────────────────────────────────

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
polys = st.lists(rationals, min_size=0, max_size=6).map(UniPoly.from_coeffs)
complex_polys = st.lists(gaussians, min_size=0, max_size=5).map(UniPoly.from_coeffs)


def P(*coeffs, var="s"):
    return UniPoly.from_coeffs([Fraction(c) for c in coeffs], var)


def to_sympy(p: UniPoly, x):
    return sum(sp.Rational(c.numerator, c.denominator) * x ** j for j, c in enumerate(p.coeffs))


@pytest.fixture(scope="module")
def nctx():
    return NumericContext(128)


# ── Scalars ───────────────────────────────────────────────────────────────────

class TestScalars:
    def test_coerce_collapses_real_gaussian(self):
        assert isinstance(coerce(GaussianRational(3, 0)), Fraction)
        assert coerce(GaussianRational(3, 0)) == 3

    def test_i_squared_is_minus_one(self):
        assert coerce(I * I) == -1

    def test_i_power_cycle(self):
        assert [i_power(n) for n in range(4)] == [1, I, -1, -I]
        assert i_power(-1) == -I
        assert i_power(7) == -I

    def test_division(self):
        z = GaussianRational(1, 2) / GaussianRational(3, -4)
        assert z * GaussianRational(3, -4) == GaussianRational(1, 2)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1, 1) / GaussianRational(0, 0)

    def test_parse_and_format(self):
        assert parse_rational("-3/6") == Fraction(-1, 2)
        assert parse_rational(" 7 ") == 7
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert format_rational(Fraction(4, 2)) == "2"

    def test_parse_rejects_garbage(self):
        with pytest.raises(DomainError):
            parse_rational("1.5")
        with pytest.raises(DomainError):
            parse_rational("1/0")

    @given(gaussians, gaussians)
    def test_conjugation_is_multiplicative(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


# ── Polynomials ───────────────────────────────────────────────────────────────

class TestUniPoly:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0).degree == 1
        assert P().degree == -1
        assert P(0, 0).is_zero

    def test_str(self):
        assert str(P(1, -2, 2)) == "2s^2 - 2s + 1"
        assert str(P(-1, 2)) == "2s - 1"

    def test_primitive(self):
        p = P(Fraction(-1, 2), Fraction(-1, 4)).primitive()
        assert p.coeffs == (2, 1)

    def test_positive_scaled_keeps_sign(self):
        p = P(Fraction(1, 2), Fraction(-3, 4)).positive_scaled()
        assert p.coeffs == (2, -3)

    def test_divmod(self):
        q, r = P(-1, 0, 1).divmod(P(-1, 1))
        assert q == P(1, 1)
        assert r.is_zero

    def test_gcd(self):
        a = P(-1, 0, 1)          # (s-1)(s+1)
        b = P(1, 2, 1)           # (s+1)^2
        assert poly_gcd(a, b) == P(1, 1)

    @given(polys, polys)
    def test_multiplication_matches_sympy(self, a, b):
        x = sp.Symbol("x")
        ours = to_sympy(a * b, x)
        theirs = sp.expand(to_sympy(a, x) * to_sympy(b, x))
        assert sp.expand(ours - theirs) == 0

    @given(polys, polys)
    def test_divmod_identity(self, a, b):
        if b.is_zero:
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(complex_polys, rationals, rationals)
    def test_shift_composition(self, p, a, b):
        assert poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b)

    @given(polys, rationals)
    def test_shift_preserves_degree(self, p, a):
        assert poly_shift(p, a).degree == p.degree


# ── Critical line ─────────────────────────────────────────────────────────────

class TestCriticalLine:
    def test_restriction_of_2s_minus_1(self):
        rho = critical_line_restriction(P(-1, 2), 1)
        assert rho == P(0, 2, var="t")

    def test_restriction_of_degree_two(self):
        rho = critical_line_restriction(P(1, -2, 2), 2)
        assert rho == P(Fraction(-1, 2), 0, 2, var="t")

    def test_non_symmetric_polynomial_rejected(self):
        with pytest.raises(NonRealRestrictionError):
            critical_line_restriction(P(0, 1), 1)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(DomainError):
            critical_line_restriction(P(-1, 2), 2)

    def test_lift_inverts_restriction(self):
        p = P(1, -2, 2)
        assert critical_line_lift(critical_line_restriction(p, 2), 2) == p


# ── Sturm ─────────────────────────────────────────────────────────────────────

class TestSturm:
    def test_count_two_roots(self):
        assert sturm_count(P(-1, 0, 1, var="t"), -2, 2) == 2

    def test_count_excludes_outside(self):
        assert sturm_count(P(-1, 0, 1, var="t"), 0, 2) == 1

    def test_no_real_roots(self):
        assert count_real_roots(P(1, 0, 1, var="t")) == 0

    def test_repeated_root_counted_once(self):
        rho = P(1, 2, 1, var="t")
        assert count_real_roots(rho) == 1
        assert not squarefree_check(rho)

    def test_endpoint_root_raises(self):
        with pytest.raises(EndpointRootError):
            sturm_count(P(-1, 1, var="t"), 1, 3)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(DomainError):
            count_real_roots(P())

    def test_cauchy_bound(self):
        assert cauchy_root_bound(P(-6, 1, 1, var="t")) == 7

    def test_constant_has_no_roots(self):
        assert count_real_roots(P(5, var="t")) == 0
        assert squarefree_check(P(5, var="t"))

    @settings(max_examples=60)
    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(0, 3))
    def test_count_matches_sympy(self, roots, complex_pairs):
        t = sp.Symbol("t")
        expr = sp.Integer(1)
        for r in roots:
            expr *= (t - r)
        for j in range(complex_pairs):
            expr *= (t ** 2 + j + 1)
        coeffs = sp.Poly(sp.expand(expr), t).all_coeffs()[::-1]
        rho = UniPoly.from_coeffs([Fraction(int(c)) for c in coeffs], "t")
        assert count_real_roots(rho) == sp.Poly(expr, t).sqf_part().count_roots()
        assert count_real_roots(rho) == len(set(roots))


# ── Exact against numeric root counts ─────────────────────────────────────────

def _from_factors(real_roots, pairs, lead):
    """lead · Π (t - r) · Π ((t - a)² + b²) with b != 0; squarefree when the r are distinct."""
    t = UniPoly.identity("t")
    rho = UniPoly.constant(lead, "t")
    for r in real_roots:
        rho = rho * (t - r)
    for a, b in pairs:
        rho = rho * ((t - a) ** 2 + b * b)
    return rho


class TestRootCountAgreement:
    def test_seeded_random_polynomials(self, nctx):
        rng = np.random.default_rng(20240601)
        for _ in range(100):
            n_pairs = int(rng.integers(0, 5))
            n_real = int(rng.integers(0 if n_pairs else 1, 9 - 2 * n_pairs))
            real_roots = [Fraction(int(n), 8) for n in rng.choice(np.arange(-48, 49), size=n_real, replace=False)]
            pairs = [
                (Fraction(int(rng.integers(-32, 33)), 8), Fraction(int(rng.integers(1, 17)), 8))
                for _ in range(n_pairs)
            ]
            lead = Fraction(int(rng.choice([-3, -2, -1, 1, 2, 3])), int(rng.integers(1, 6)))
            rho = _from_factors(real_roots, pairs, lead)
            assert 1 <= rho.degree <= 8
            assert count_real_roots(rho) == n_real, str(rho)
            assert real_root_count(nctx, rho) == n_real, str(rho)

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(st.integers(-40, 40), unique=True, max_size=8),
        st.lists(st.tuples(st.integers(-20, 20), st.integers(1, 16)), max_size=4),
        st.integers(1, 5),
    )
    def test_counts_agree(self, nctx, real_eighths, pair_eighths, lead):
        assume(1 <= len(real_eighths) + 2 * len(pair_eighths) <= 8)
        rho = _from_factors(
            [Fraction(n, 8) for n in real_eighths],
            [(Fraction(a, 8), Fraction(b, 8)) for a, b in pair_eighths],
            lead,
        )
        assert count_real_roots(rho) == real_root_count(nctx, rho) == len(real_eighths)


# ── Linear algebra ────────────────────────────────────────────────────────────

class TestLinalg:
    def test_nullspace_matches_sympy(self):
        rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, 2]]
        ours = nullspace(rows)
        theirs = sp.Matrix(rows).nullspace()
        assert len(ours) == len(theirs) == 2
        for vec in ours:
            for row in rows:
                assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0

    def test_rank(self):
        assert rank([[1, 0], [0, 1], [1, 1]]) == 2

    def test_complex_nullspace(self):
        vec = nullspace([[1, I]])[0]
        assert coerce(vec[0] + I * vec[1]) == 0

    def test_echelon_basis(self):
        basis = EchelonBasis(3)
        assert basis.add([1, 1, 0])
        assert basis.add([0, 1, 1])
        assert not basis.add([1, 2, 1])
        assert basis.dimension == 2
        assert basis.contains([2, 3, 1])
        assert not basis.contains([0, 0, 1])
