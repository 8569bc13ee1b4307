"""
tate.lrh._core.zeta.angular
===========================
Angular decomposition of H_m(√(2π) r cos θ).

Writing x = √(2π) r cos θ and reducing cos^n θ to multiple angles,

    H_m(√(2π) r cos θ) = Σ_k (2π)^(k/2) r^k a_((m-k)/2)(2π r²) cos(kθ)

over k ≡ m (mod 2), 0 <= k <= m, where every a_j has rational
coefficients and degree j in w = 2π r².
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from tate.core.exceptions import DomainError
from tate.lrh._core.exact.unipoly import UniPoly
from tate.lrh._core.zeta.orthopoly import cos_power_expand, hermite_poly


@dataclass(frozen=True)
class AngularDecomposition:
    """
    Attributes:
        m          : Hermite degree.
        components : k ↦ a_((m-k)/2)(w), with the (2π)^(k/2) r^k factor removed.
    """
    m:          int
    components: Dict[int, UniPoly] = field(default_factory=dict)

    def component(self, k: int) -> UniPoly:
        return self.components.get(k, UniPoly.zero("w"))

    def evaluate(self, ctx, r, theta):
        """
        Numerically rebuild Σ_k (2π)^(k/2) r^k a(2πr²) cos(kθ) in the
        mpmath context ctx.
        """
        two_pi = 2 * ctx.pi
        w = two_pi * r * r
        total = ctx.mpf(0)
        for k, a in self.components.items():
            acc = ctx.mpf(0)
            for c in reversed(a.coeffs):
                acc = acc * w + ctx.mpf(c.numerator) / c.denominator
            total += ctx.power(two_pi, ctx.mpf(k) / 2) * r ** k * acc * ctx.cos(k * theta)
        return total


@lru_cache(maxsize=None)
def angular_decompose(m: int) -> AngularDecomposition:
    """Collect the cos(kθ) components of H_m(√(2π) r cos θ)."""
    if m < 0:
        raise DomainError("angular_decompose needs m >= 0", details={"m": m})
    h = hermite_poly(m)
    buckets: Dict[int, Dict[int, Fraction]] = {}
    for n, hn in enumerate(h.coeffs):
        if hn == 0:
            continue
        for k, ck in cos_power_expand(n).items():
            j = (n - k) // 2
            bucket = buckets.setdefault(k, {})
            bucket[j] = bucket.get(j, Fraction(0)) + hn * ck
    components = {
        k: UniPoly.from_coeffs(
            (bucket.get(j, Fraction(0)) for j in range(max(bucket) + 1)), "w"
        )
        for k, bucket in sorted(buckets.items())
    }
    return AngularDecomposition(m=m, components=components)
