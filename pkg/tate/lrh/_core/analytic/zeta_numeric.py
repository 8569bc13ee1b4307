"""
tate.lrh._core.analytic.zeta_numeric
====================================
The local zeta integral

    ζ(s, ν, f) = ∫_{ℂ^×} f(z) ν(z) |z|^(2s-2) dz,   ν(re^{iθ}) = r^{iα} e^{ikθ}

for polynomial × Gaussian f. Writing u = √(2π) r cos θ, v = √(2π) r sin θ,
the θ-integral of every monomial is exact, which leaves

    ζ = ∫_0^∞ Σ_N C_N (√(2π) r)^N r^(2s-1+iα) e^(-πr²) dr

with exact coefficients C_N. The radial integral is done by quadrature
(zeta_numeric) or by the Mellin identity (zeta_closed_form):

    ∫_0^∞ r^(N+2s-1) e^(-πr²) dr = Γ(s + N/2) / (2 π^(s+N/2)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence

from tate.core.data_types import QuadratureResult
from tate.core.exceptions import DomainError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.gamma import gamma_complex
from tate.lrh._core.analytic.quadrature import integrate
from tate.lrh._core.exact.scalars import I, Scalar, coerce
from tate.lrh._core.weil.hermgauss import HermGaussFn, hermite_fn
from tate.lrh._core.zeta.zeta_poly import zeta_poly_expansion

TAIL_TOLERANCE = 1e-30
DEFAULT_TOLERANCE = 1e-25


@lru_cache(maxsize=None)
def angular_coefficient(a: int, b: int, k: int) -> Scalar:
    """
    c with ∫_0^{2π} cos^a θ sin^b θ e^{ikθ} dθ = 2π c, exactly.

    cos^a sin^b = (2^a (2i)^b)^(-1) Σ_{p,q} C(a,p) C(b,q) (-1)^(b-q) e^{i(2p-a+2q-b)θ},
    so only p + q = (a + b - k)/2 survives.
    """
    total = a + b - k
    if total % 2:
        return Fraction(0)
    target = total // 2
    acc = Fraction(0)
    for p in range(max(0, target - b), min(a, target) + 1):
        q = target - p
        acc += comb(a, p) * comb(b, q) * (-1) ** (b - q)
    return coerce(acc / (Fraction(2) ** a * (I * 2) ** b))


def radial_coefficients(f: HermGaussFn, k: int) -> Dict[int, Scalar]:
    """N ↦ C_N with the θ-integral of f·e^{ikθ} equal to 2π Σ_N C_N (√(2π) r)^N e^(-πr²)."""
    out: Dict[int, Scalar] = {}
    for (a, b), c in f.terms.items():
        ang = angular_coefficient(a, b, k)
        if ang != 0:
            out[a + b] = coerce(out.get(a + b, Fraction(0)) + c * ang)
    return {n: c for n, c in out.items() if c != 0}


def _check_region(nctx: NumericContext, s) -> None:
    if nctx.mp.re(s) <= 0:
        raise DomainError("zeta integral needs Re(s) > 0", details={"s": str(s)})


def _tail_bound(nctx: NumericContext, weights: Dict[int, object], sigma, radius):
    """
    Σ_N |w_N| ∫_R^∞ r^(N+2σ-1) e^(-πr²) dr, each term an upper incomplete Gamma.
    """
    mp = nctx.mp
    total = mp.mpf(0)
    for n, w in weights.items():
        a = (n + 2 * sigma) / 2
        total += abs(w) * mp.gammainc(a, mp.pi * radius ** 2) / (2 * mp.pi ** a)
    return total


def truncation_radius(nctx: NumericContext, weights: Dict[int, object], sigma):
    """Smallest R (in steps of 1/2 from 2) with tail below TAIL_TOLERANCE."""
    mp = nctx.mp
    radius = mp.mpf(2)
    while _tail_bound(nctx, weights, sigma, radius) >= TAIL_TOLERANCE:
        radius += mp.mpf(1) / 2
    return radius


def zeta_numeric(
    nctx: NumericContext,
    f: HermGaussFn,
    k: int,
    s,
    alpha=0,
    tol: float = DEFAULT_TOLERANCE,
) -> QuadratureResult:
    """
    ζ(s, r^{iα} e^{ikθ}, f) by exact angular extraction and radial quadrature.

    The result is exactly zero, with no evaluations, when every angular
    coefficient vanishes.

    Raises
    ------
    DomainError
        If Re(s) <= 0.
    NonConvergentError
        If truncation plus quadrature error exceeds tol.
    """
    mp = nctx.mp
    s = nctx.parse(s)
    _check_region(nctx, s)
    coeffs = radial_coefficients(f, k)
    if not coeffs:
        return QuadratureResult(value=mp.mpc(0), error_estimate=0.0, evaluations=0)

    two_pi = 2 * mp.pi
    scale = mp.sqrt(two_pi)
    weights = {n: two_pi * nctx.to_mp(c) * scale ** n for n, c in coeffs.items()}
    exponent = 2 * s - 1 + mp.mpc(0, 1) * nctx.parse(alpha)
    radius = truncation_radius(nctx, weights, mp.re(s))
    tail = _tail_bound(nctx, weights, mp.re(s), radius)

    def integrand(r):
        poly = mp.mpf(0)
        for n, w in weights.items():
            poly += w * r ** n
        return poly * mp.power(r, exponent) * mp.exp(-mp.pi * r * r)

    points = [0, radius / 8, radius / 4, radius / 2, radius]
    return integrate(nctx, integrand, points, tol=tol, extra_error=tail, relative=True)


def zeta_closed_form(nctx: NumericContext, f: HermGaussFn, k: int, s, alpha=0):
    """ζ(s, r^{iα} e^{ikθ}, f) through the Mellin identity; no quadrature."""
    mp = nctx.mp
    s = nctx.parse(s) + mp.mpc(0, 1) * nctx.parse(alpha) / 2
    total = mp.mpc(0)
    for n, c in radial_coefficients(f, k).items():
        shift = s + mp.mpf(n) / 2
        total += (
            2 * mp.pi * nctx.to_mp(c) * (2 * mp.pi) ** (mp.mpf(n) / 2)
            * gamma_complex(nctx, shift) / (2 * mp.power(mp.pi, shift))
        )
    return total


def gamma_pi_factor(nctx: NumericContext, k: int, s):
    """Γ(s + k/2) π^(1-s)."""
    mp = nctx.mp
    return gamma_complex(nctx, s + mp.mpf(k) / 2) * mp.power(mp.pi, 1 - s)


def zeta_mk(nctx: NumericContext, m: int, k: int, s):
    """ζ_m^(k)(s) = Γ(s + k/2) π^(1-s) p_m^(k)(s) from the exact polynomial."""
    rec = zeta_poly_expansion(m, k)
    s = nctx.parse(s)
    if rec.is_zero:
        return nctx.mp.mpc(0)
    return gamma_pi_factor(nctx, k, s) * nctx.eval_poly(rec.coeffs, s)


def zeta_ratio_scan(
    nctx: NumericContext,
    f: HermGaussFn,
    m: int,
    k: int,
    samples: Sequence,
    tol: float = DEFAULT_TOLERANCE,
) -> List:
    """
    ζ(s_i, ν_k, f) / ζ_m^(k)(s_i) for each sample; constant when f ∈ W_m.

    Raises
    ------
    DomainError
        If (m, k) is vacuous or a sample is a zero of p_m^(k).
    """
    rec = zeta_poly_expansion(m, k)
    if rec.is_zero:
        raise DomainError("ratio scan needs an admissible (m, k)", details={"m": m, "k": k})
    ratios = []
    for s in samples:
        s = nctx.parse(s)
        denom = gamma_pi_factor(nctx, k, s) * nctx.eval_poly(rec.coeffs, s)
        if abs(denom) < nctx.mp.mpf(10) ** -30:
            raise DomainError("sample is a zero of p_m^(k)", details={"m": m, "k": k, "s": str(s)})
        ratios.append(zeta_numeric(nctx, f, k, s, tol=tol).value / denom)
    return ratios


def ratio_spread(ratios: Sequence) -> float:
    """max_i |r_i - r_0| / |r_0|; 0 for fewer than two ratios."""
    if len(ratios) < 2:
        return 0.0
    base = ratios[0]
    if base == 0:
        return float("inf") if any(r != 0 for r in ratios) else 0.0
    return float(max(abs(r - base) for r in ratios[1:]) / abs(base))


def functional_equation_numeric(nctx: NumericContext, m: int, k: int, s) -> float:
    """
    Relative residual of

        (m+1) ζ(s) = π ζ(s+1) - (1/π)(s + k/2 - 1)(s - k/2 - 1) ζ(s-1)

    for ζ(s) = ζ(s, ν_k, f_{m,0}), each value from the Mellin identity.
    """
    mp = nctx.mp
    s = nctx.parse(s)
    f = hermite_fn(m, 0)
    half_k = mp.mpf(k) / 2
    center = (m + 1) * zeta_closed_form(nctx, f, k, s)
    rhs = (
        mp.pi * zeta_closed_form(nctx, f, k, s + 1)
        - (s + half_k - 1) * (s - half_k - 1) * zeta_closed_form(nctx, f, k, s - 1) / mp.pi
    )
    scale = max(abs(center), abs(rhs), mp.mpf(10) ** -40)
    return float(abs(center - rhs) / scale)
