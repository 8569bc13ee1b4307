"""
tate.lrh._core.exact.sturm
==========================
Exact real-root certificates: Sturm chains, squarefreeness and the Cauchy
root bound.

Sturm's theorem: for a real polynomial ρ with ρ(lo), ρ(hi) != 0, the number
of distinct real roots in (lo, hi) equals V(lo) - V(hi), where V(x) counts
sign changes (zeros skipped) along the chain
    ρ0 = ρ,  ρ1 = ρ',  ρ(j+1) = -rem(ρ(j-1), ρ(j))
which ends at a constant multiple of gcd(ρ, ρ').
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from tate.core.exceptions import DomainError, EndpointRootError
from tate.lrh._core.exact.unipoly import UniPoly, poly_gcd


def _require_real(rho: UniPoly, op: str) -> None:
    if rho.is_zero:
        raise DomainError(f"{op} needs a nonzero polynomial")
    if not rho.is_real:
        raise DomainError(
            f"{op} needs rational coefficients",
            details={"poly": str(rho)},
        )


def sturm_chain(rho: UniPoly) -> List[UniPoly]:
    """
    Signed remainder chain of rho.

    Each remainder is rescaled by a positive rational to primitive integer
    form; signs are untouched, so sign-change counts are unchanged.
    """
    _require_real(rho, "sturm_chain")
    chain = [rho.positive_scaled()]
    current = rho.derivative().positive_scaled()
    while not current.is_zero:
        chain.append(current)
        current = (-(chain[-2] % chain[-1])).positive_scaled()
    return chain


def sign_variations(chain: List[UniPoly], x: Fraction) -> int:
    """Number of sign changes in [p(x) for p in chain], zeros dropped."""
    signs = []
    for p in chain:
        v = p(x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(rho: UniPoly, lo, hi) -> int:
    """
    Exact number of distinct real roots of rho in the open interval (lo, hi).

    Raises
    ------
    EndpointRootError
        If rho vanishes at lo or hi.
    DomainError
        If rho is zero, non-real, or lo >= hi.
    """
    _require_real(rho, "sturm_count")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise DomainError("sturm_count needs lo < hi", details={"lo": str(lo), "hi": str(hi)})
    for end in (lo, hi):
        if rho(end) == 0:
            raise EndpointRootError(
                "polynomial vanishes at an interval endpoint",
                details={"endpoint": str(end), "poly": str(rho)},
            )
    chain = sturm_chain(rho)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def squarefree_check(rho: UniPoly) -> bool:
    """True iff gcd(rho, rho') is constant."""
    if rho.is_zero:
        raise DomainError("squarefree_check needs a nonzero polynomial")
    return poly_gcd(rho, rho.derivative()).degree == 0


def cauchy_root_bound(rho: UniPoly) -> Fraction:
    """
    B = 1 + max_j |c_j / c_deg|; every complex root has modulus <= B.
    """
    _require_real(rho, "cauchy_root_bound")
    if rho.degree < 1:
        raise DomainError("cauchy_root_bound needs degree >= 1", details={"poly": str(rho)})
    lead = Fraction(rho.leading)
    return 1 + max(abs(Fraction(c) / lead) for c in rho.coeffs[:-1])


def count_real_roots(rho: UniPoly) -> int:
    """Total number of distinct real roots, via the Cauchy window (-B-1, B+1)."""
    _require_real(rho, "count_real_roots")
    if rho.degree < 1:
        return 0
    bound = cauchy_root_bound(rho) + 1
    return sturm_count(rho, -bound, bound)
