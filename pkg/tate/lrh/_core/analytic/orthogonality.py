"""
tate.lrh._core.analytic.orthogonality
=====================================
Orthogonality of the critical-line restrictions ρ_m(t) = (-i)^d p_m^(k)(1/2 + it)
for the weight w_k(t) = |Γ((k+1)/2 + it)|².

Integrals of polynomials against w_k reduce to the moments
M_j = ∫ t^j w_k(t) dt, computed once per (k, precision) by quadrature on
[0, T] with T chosen so the neglected tail is below 1e-25.
"""

from __future__ import annotations

from typing import List, Tuple

from tate.core.exceptions import DomainError, IdentityViolatedError, NonConvergentError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.gamma import ortho_weight
from tate.lrh._core.exact.unipoly import UniPoly, critical_line_restriction
from tate.lrh._core.zeta.zeta_poly import zeta_poly_expansion

MOMENT_TAIL = 1e-25

def _tail_parameters(k: int) -> Tuple[int, float]:
    """
    (factors, shift) with w_k(t) <= 4π·2^factors·t^(2·factors + 1)·e^(-πt)
    for t >= max(1, shift).
    """
    if k % 2:
        return (k + 1) // 2 - 1, float((k + 1) // 2 - 1)
    return k // 2, k / 2 - 0.5


def _moment_cutoff(nctx: NumericContext, k: int, j: int):
    """Smallest T with ∫_T^∞ t^j w_k(t) dt below MOMENT_TAIL."""
    mp = nctx.mp
    factors, shift = _tail_parameters(k)
    power = j + 2 * factors + 1
    lead = 4 * mp.pi * mp.mpf(2) ** factors
    cutoff = mp.mpf(max(1.0, shift, 4.0))
    while lead * mp.gammainc(power + 1, mp.pi * cutoff) / mp.pi ** (power + 1) >= MOMENT_TAIL:
        cutoff += 1
    return cutoff


def weight_moments(nctx: NumericContext, k: int, count: int) -> List:
    """M_0 … M_(count-1); odd moments vanish since w_k is even."""
    cached = nctx.moment_cache.get(k, [])
    if len(cached) >= count:
        return cached[:count]

    mp = nctx.mp
    moments = list(cached)
    for j in range(len(cached), count):
        if j % 2:
            moments.append(mp.mpf(0))
            continue
        cutoff = _moment_cutoff(nctx, k, j)
        value, err = mp.quad(
            lambda t, j=j: t ** j * ortho_weight(nctx, k, t),
            mp.linspace(0, cutoff, 9),
            error=True,
            maxdegree=10,
        )
        if err > MOMENT_TAIL * max(1, abs(value)):
            raise NonConvergentError(
                "weight moment quadrature did not converge",
                details={"k": k, "j": j, "estimate": float(err)},
            )
        moments.append(2 * value)
    nctx.moment_cache[k] = moments
    return moments


def weighted_inner(nctx: NumericContext, rho1: UniPoly, rho2: UniPoly, k: int):
    """∫ ρ1(t) ρ2(t) w_k(t) dt over the real line."""
    product = rho1 * rho2
    if product.is_zero:
        return nctx.mp.mpf(0)
    moments = weight_moments(nctx, k, product.degree + 1)
    total = nctx.mp.mpf(0)
    for j, c in enumerate(product.coeffs):
        if c != 0:
            total += nctx.to_mp(c) * moments[j]
    return total


def critical_restriction(m: int, k: int) -> UniPoly:
    rec = zeta_poly_expansion(m, k)
    if rec.is_zero:
        raise DomainError("(m, k) is vacuous", details={"m": m, "k": k})
    return critical_line_restriction(rec.coeffs, rec.degree)


def orthogonality_check(nctx: NumericContext, m: int, m2: int, k: int, tol: float = 1e-10) -> bool:
    """
    |∫ ρ_m ρ_m2 w_k dt| <= tol·‖ρ_m‖‖ρ_m2‖, with both diagonal integrals
    strictly positive. For m == m2 only positivity is checked.

    Raises
    ------
    DomainError
        If either pair is vacuous.
    IdentityViolatedError
        If orthogonality or positivity fails.
    """
    rho1, rho2 = critical_restriction(m, k), critical_restriction(m2, k)
    diag1 = weighted_inner(nctx, rho1, rho1, k)
    diag2 = weighted_inner(nctx, rho2, rho2, k)
    if diag1 <= 0 or diag2 <= 0:
        raise IdentityViolatedError(
            "diagonal weighted integral is not positive",
            details={"m": m, "m2": m2, "k": k, "residual": f"{float(diag1)}, {float(diag2)}"},
        )
    if m == m2:
        return True
    cross = weighted_inner(nctx, rho1, rho2, k)
    bound = tol * nctx.mp.sqrt(diag1 * diag2)
    if abs(cross) > bound:
        raise IdentityViolatedError(
            "critical-line restrictions are not orthogonal",
            details={"m": m, "m2": m2, "k": k, "residual": float(abs(cross) / nctx.mp.sqrt(diag1 * diag2))},
        )
    return True


def orthogonality_ratio(nctx: NumericContext, m: int, m2: int, k: int) -> float:
    """|⟨ρ_m, ρ_m2⟩| / (‖ρ_m‖‖ρ_m2‖), for reporting."""
    rho1, rho2 = critical_restriction(m, k), critical_restriction(m2, k)
    diag = nctx.mp.sqrt(weighted_inner(nctx, rho1, rho1, k) * weighted_inner(nctx, rho2, rho2, k))
    return float(abs(weighted_inner(nctx, rho1, rho2, k)) / diag)
