"""
tate.lrh._core.weil.bmn
=======================
The rotation eigenbasis b_{m,n} of W_m.

    b_{m,n}(re^{iθ}) = e^{inθ} r^|n| L_((m-|n|)/2)^(|n|)(2πr²) e^(-πr²)

In scaled coordinates 2πr² = u² + v² and e^{inθ} r^|n| is (u ± iv)^|n| up to
the constant (2π)^(-|n|/2), which is dropped.
"""

from __future__ import annotations

from tate.core.exceptions import DomainError
from tate.lrh._core.exact.scalars import I
from tate.lrh._core.weil.hermgauss import HermGaussFn
from tate.lrh._core.zeta.orthopoly import laguerre_poly


def bmn_fn(m: int, n: int) -> HermGaussFn:
    """
    (u + i·sign(n)·v)^|n| · L_((m-|n|)/2)^(|n|)(u² + v²) · weight.

    Raises
    ------
    DomainError
        If |n| > m or m - |n| is odd.
    """
    if m < 0 or abs(n) > m or (m - abs(n)) % 2:
        raise DomainError(
            "b_{m,n} needs |n| <= m and m - |n| even",
            details={"m": m, "n": n},
        )
    alpha = abs(n)
    phase_unit = HermGaussFn({(1, 0): 1, (0, 1): I if n >= 0 else -I})
    phase = HermGaussFn.monomial(0, 0)
    for _ in range(alpha):
        phase = phase * phase_unit

    r2 = HermGaussFn({(2, 0): 1, (0, 2): 1})
    radial = HermGaussFn.zero()
    power = HermGaussFn.monomial(0, 0)
    for c in laguerre_poly((m - alpha) // 2, alpha).coeffs:
        radial = radial + power * c
        power = power * r2
    return phase * radial


def w_basis(m: int):
    """The admissible n for b_{m,n}: -m, -m+2, …, m."""
    return range(-m, m + 1, 2)
