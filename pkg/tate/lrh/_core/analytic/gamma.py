"""
tate.lrh._core.analytic.gamma
=============================
Complex Gamma and the orthogonality weight |Γ((k+1)/2 + it)|².
"""

from __future__ import annotations

from tate.core.exceptions import PoleProximityError
from tate.lrh._core.analytic.context import NumericContext

POLE_DISTANCE = 1e-15


def gamma_complex(nctx: NumericContext, s):
    """
    Γ(s) at the context precision.

    Raises
    ------
    PoleProximityError
        If s is within 1e-15 of a nonpositive integer.
    """
    mp = nctx.mp
    s = nctx.parse(s)
    nearest = mp.nint(mp.re(s))
    if nearest <= 0 and abs(s - nearest) < POLE_DISTANCE:
        raise PoleProximityError(
            "Gamma evaluated at a pole",
            details={"s": str(s), "pole": int(nearest)},
        )
    return mp.gamma(s)


def ortho_weight(nctx: NumericContext, k: int, t):
    """
    |Γ((k+1)/2 + it)|² in closed form.

    k odd, n = (k+1)/2:  πt / sinh(πt) · ∏_{j=1}^{n-1} (j² + t²)
    k even:              π / cosh(πt) · ∏_{j=1}^{k/2} ((j - 1/2)² + t²)

    πt / sinh(πt) takes its limit 1 at t = 0.
    """
    mp = nctx.mp
    t = nctx.parse(t)
    if k % 2:
        n = (k + 1) // 2
        base = mp.mpf(1) if t == 0 else mp.pi * t / mp.sinh(mp.pi * t)
        shifts = [mp.mpf(j) for j in range(1, n)]
    else:
        base = mp.pi / mp.cosh(mp.pi * t)
        shifts = [mp.mpf(j) - mp.mpf(1) / 2 for j in range(1, k // 2 + 1)]
    for a in shifts:
        base *= a * a + t * t
    return base
