"""
tate.lrh._core.zeta.zeta_poly
=============================
The polynomial factor p_m^(k)(s) of

    ζ_m^(k)(s) = Γ(s + k/2) π^(1-s) p_m^(k)(s)

built by two independent exact routes, and the exact polynomial identities
it must satisfy.

Expansion route
    The k-component of H_m(√(2π) r cos θ) is (2π)^(k/2) r^k a(2πr²) cos kθ
    with a(w) = Σ_j b_j w^j. Each radial term integrates to
        ∫ r^(2s-1+k+2j) e^(-πr²) dr = Γ(s+j+k/2) / (2 π^(s+j+k/2))
    and Γ(s+j+k/2) = Γ(s+k/2)·(s+k/2)(s+k/2+1)…(s+k/2+j-1), so up to a
    constant p(s) = Σ_j b_j 2^j (s+k/2)_j (rising product).

Recurrence route
    q(s) = p(s + 1/2) spans the eigenspace of
        T(q)(s) = (s + a) q(s+1) - (s - a) q(s-1),   a = (k+1)/2
    for eigenvalue m + 1 on polynomials of degree <= d = (m-k)/2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from tate.core.data_types import Route, ZetaPolyRecord
from tate.core.exceptions import (
    DegenerateEigenspaceError,
    DomainError,
    IdentityViolatedError,
)
from tate.lrh._core.exact.linalg import nullspace
from tate.lrh._core.exact.unipoly import UniPoly, poly_shift
from tate.lrh._core.zeta.angular import angular_decompose


def _check_indices(m: int, k: int) -> None:
    if m < 0 or k < 0:
        raise DomainError("m and k must be nonnegative", details={"m": m, "k": k})


def is_admissible(m: int, k: int) -> bool:
    """True iff d = (m-k)/2 is a nonnegative integer, i.e. ζ_m^(k) is not identically zero."""
    return 0 <= k <= m and (m - k) % 2 == 0


def zero_record(m: int, k: int, route: str = Route.EXPANSION) -> ZetaPolyRecord:
    return ZetaPolyRecord(
        m=m, k=k, degree=-1, coeffs=UniPoly.zero("s"), route=route, is_zero=True
    )


def rising_factorial(x: UniPoly, j: int) -> UniPoly:
    """x (x+1) … (x+j-1); the constant 1 for j = 0."""
    out = UniPoly.constant(1, x.var)
    for i in range(j):
        out = out * (x + i)
    return out


# ── Expansion route ───────────────────────────────────────────────────────────

def zeta_poly_expansion(m: int, k: int) -> ZetaPolyRecord:
    """
    p_m^(k) from the angular decomposition and the Mellin step.

    Returns the zero record when k > m or m - k is odd.
    """
    _check_indices(m, k)
    if not is_admissible(m, k):
        return zero_record(m, k, Route.EXPANSION)

    a = angular_decompose(m).component(k)
    shift = UniPoly.linear(1, Fraction(k, 2), "s")
    p = UniPoly.zero("s")
    for j, b in enumerate(a.coeffs):
        if b != 0:
            p = p + rising_factorial(shift, j) * (b * 2 ** j)

    return ZetaPolyRecord(
        m=m, k=k, degree=(m - k) // 2, coeffs=p.primitive(), route=Route.EXPANSION
    )


# ── Recurrence route ──────────────────────────────────────────────────────────

def shift_operator_matrix(k: int, d: int) -> List[List[Fraction]]:
    """
    Matrix of T on the monomial basis {1, s, …, s^d}; column j holds the
    coefficients of T(s^j). T is upper triangular with diagonal k + 2j + 1.
    """
    a = Fraction(k + 1, 2)
    s = UniPoly.identity("s")
    plus, minus = s + a, s - a
    cols = []
    for j in range(d + 1):
        mono = UniPoly.monomial(j, 1, "s")
        image = plus * poly_shift(mono, 1) - minus * poly_shift(mono, -1)
        cols.append([Fraction(image.coeff(i)) for i in range(d + 1)])
    return [[cols[j][i] for j in range(d + 1)] for i in range(d + 1)]


def zeta_poly_recurrence(m: int, k: int) -> ZetaPolyRecord:
    """
    p_m^(k) from the (m+1)-eigenvector of the shift operator T.

    Raises
    ------
    DomainError
        If (m - k)/2 is not a nonnegative integer.
    DegenerateEigenspaceError
        If the eigenspace for m + 1 is not one-dimensional.
    """
    _check_indices(m, k)
    if not is_admissible(m, k):
        raise DomainError(
            "recurrence route needs (m - k)/2 to be a nonnegative integer",
            details={"m": m, "k": k},
        )
    d = (m - k) // 2
    t = shift_operator_matrix(k, d)
    shifted = [
        [t[i][j] - (m + 1 if i == j else 0) for j in range(d + 1)]
        for i in range(d + 1)
    ]
    basis = nullspace(shifted)
    if len(basis) != 1:
        raise DegenerateEigenspaceError(
            "eigenspace for m + 1 is not one-dimensional",
            details={"m": m, "k": k, "dimension": len(basis)},
        )
    q = UniPoly.from_coeffs(basis[0], "s")
    p = poly_shift(q, Fraction(-1, 2))
    return ZetaPolyRecord(
        m=m, k=k, degree=d, coeffs=p.primitive(), route=Route.RECURRENCE
    )


def zeta_poly(m: int, k: int, route: str = Route.EXPANSION) -> ZetaPolyRecord:
    """Dispatch on route; vacuous pairs give the zero record on either route."""
    if route == Route.EXPANSION:
        return zeta_poly_expansion(m, k)
    if route == Route.RECURRENCE:
        _check_indices(m, k)
        if not is_admissible(m, k):
            return zero_record(m, k, Route.RECURRENCE)
        return zeta_poly_recurrence(m, k)
    raise DomainError(f"unknown route: {route!r}", details={"route": route})


# ── Exact identities ──────────────────────────────────────────────────────────

def _require_nonzero(rec: ZetaPolyRecord, op: str) -> UniPoly:
    if rec.is_zero:
        raise DomainError(f"{op} needs a nonzero record", details={"m": rec.m, "k": rec.k})
    return rec.coeffs


def functional_equation_residual(rec: ZetaPolyRecord) -> UniPoly:
    """
    (s + k/2) p(s+1) - (s - k/2 - 1) p(s-1) - (m+1) p(s).
    """
    p = _require_nonzero(rec, "functional_equation_check")
    half_k = Fraction(rec.k, 2)
    s = UniPoly.identity("s")
    rhs = (s + half_k) * poly_shift(p, 1) - (s - half_k - 1) * poly_shift(p, -1)
    return rhs - p * (rec.m + 1)


def functional_equation_check(rec: ZetaPolyRecord) -> bool:
    """
    Verify (m+1) p(s) = (s + k/2) p(s+1) - (s - k/2 - 1) p(s-1) exactly.

    Raises
    ------
    IdentityViolatedError
        With the residual polynomial in details["residual"].
    """
    residual = functional_equation_residual(rec)
    if not residual.is_zero:
        raise IdentityViolatedError(
            "functional equation fails",
            details={"m": rec.m, "k": rec.k, "residual": str(residual)},
        )
    return True


def symmetry_check(rec: ZetaPolyRecord) -> bool:
    """
    Verify p(1-s) = (-1)^d p(s) exactly.

    Raises
    ------
    IdentityViolatedError
    """
    p = _require_nonzero(rec, "symmetry_check")
    reflected = p.compose(UniPoly.linear(-1, 1, "s"))
    residual = reflected - p * (-1) ** rec.degree
    if not residual.is_zero:
        raise IdentityViolatedError(
            "critical-line symmetry fails",
            details={"m": rec.m, "k": rec.k, "residual": str(residual)},
        )
    return True


def vanishing_law_check(rec: ZetaPolyRecord) -> bool:
    """is_zero holds exactly for the vacuous pairs; degree is (m-k)/2 otherwise."""
    expected_zero = not is_admissible(rec.m, rec.k)
    if rec.is_zero != expected_zero or rec.is_zero != rec.coeffs.is_zero:
        raise IdentityViolatedError(
            "vanishing law fails",
            details={"m": rec.m, "k": rec.k, "is_zero": rec.is_zero},
        )
    if not rec.is_zero and rec.coeffs.degree != (rec.m - rec.k) // 2:
        raise IdentityViolatedError(
            "degree law fails",
            details={"m": rec.m, "k": rec.k, "residual": f"degree {rec.coeffs.degree}"},
        )
    return True
