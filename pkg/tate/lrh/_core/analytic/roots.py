"""
tate.lrh._core.analytic.roots
=============================
All complex roots of an exact polynomial by Aberth–Ehrlich simultaneous
iteration:

    w_j = p(z_j) / p'(z_j)
    z_j ← z_j - w_j / (1 - w_j Σ_{l≠j} 1/(z_j - z_l))

starting from points on a circle of Cauchy-bound radius with an angular
offset. Roots closer than CLUSTER_DISTANCE are polished again at doubled
precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from tate.core.exceptions import DomainError, NoConvergenceError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.exact.scalars import real_part, imag_part
from tate.lrh._core.exact.unipoly import UniPoly

RESIDUAL_TOLERANCE = 1e-25
CLUSTER_DISTANCE = 1e-15
MAX_ITERATIONS = 500
ANGLE_OFFSET = 0.4


def _modulus_bound(p: UniPoly) -> Fraction:
    """1 + max |c_j / c_d| from exact |·|² bounds (valid for ℚ[i] coefficients)."""
    lead = abs(real_part(p.leading)) + abs(imag_part(p.leading))
    best = Fraction(0)
    for c in p.coeffs[:-1]:
        mag = abs(real_part(c)) + abs(imag_part(c))
        best = max(best, mag)
    # |lead| >= (|re| + |im|)/√2
    return 1 + 2 * best / lead


def _aberth(nctx: NumericContext, coeffs, derivs, roots, max_iter: int):
    mp = nctx.mp
    eps = mp.mpf(2) ** (-nctx.precision_bits + 8)

    def horner(cs, z):
        acc = mp.mpc(0)
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    n = len(roots)
    for iteration in range(1, max_iter + 1):
        biggest = mp.mpf(0)
        for j in range(n):
            z = roots[j]
            pz = horner(coeffs, z)
            if pz == 0:
                continue
            dz = horner(derivs, z)
            ratio = pz / dz if dz != 0 else pz
            repulsion = mp.fsum(1 / (z - roots[l]) for l in range(n) if l != j)
            step = ratio / (1 - ratio * repulsion)
            roots[j] = z - step
            biggest = max(biggest, abs(step) / max(1, abs(roots[j])))
        if biggest < eps:
            return roots, iteration
    return roots, max_iter


def _residual(nctx: NumericContext, p: UniPoly, dp: UniPoly, z) -> float:
    value = abs(nctx.eval_poly(p, z))
    slope = abs(nctx.eval_poly(dp, z))
    return float(value / slope) if slope != 0 else float(value)


def root_find(
    nctx: NumericContext,
    p: UniPoly,
    tol: float = RESIDUAL_TOLERANCE,
    max_iter: int = MAX_ITERATIONS,
) -> List[Tuple[object, float]]:
    """
    All complex roots of p with their residuals |p(z)| / |p'(z)|, sorted by
    (Re, Im).

    Raises
    ------
    DomainError
        If p is zero or constant.
    NoConvergenceError
        If some residual stays above tol after max_iter iterations.
    """
    if p.degree < 1:
        raise DomainError("root_find needs degree >= 1", details={"poly": str(p)})
    mp = nctx.mp
    dp = p.derivative()
    coeffs = [nctx.to_mp(c) for c in p.coeffs]
    derivs = [nctx.to_mp(c) for c in dp.coeffs]
    n = p.degree

    radius = nctx.to_mp(_modulus_bound(p))
    roots = [
        radius * mp.expj(2 * mp.pi * j / n + ANGLE_OFFSET)
        for j in range(n)
    ]
    roots, _ = _aberth(nctx, coeffs, derivs, roots, max_iter)

    clustered = any(
        abs(roots[i] - roots[j]) < CLUSTER_DISTANCE
        for i in range(n) for j in range(i + 1, n)
    )
    if clustered:
        fine = nctx.doubled()
        roots, _ = _aberth(
            fine,
            [fine.to_mp(c) for c in p.coeffs],
            [fine.to_mp(c) for c in dp.coeffs],
            [fine.mp.convert(z) for z in roots],
            max_iter,
        )
        roots = [mp.convert(z) for z in roots]

    out = [(z, _residual(nctx, p, dp, z)) for z in roots]
    worst = max(res for _, res in out)
    if worst > tol:
        raise NoConvergenceError(
            "root iteration did not converge",
            details={"poly": str(p), "worst_residual": worst, "iterations": max_iter},
        )
    out.sort(key=lambda pair: (float(mp.re(pair[0])), float(mp.im(pair[0]))))
    return out


def real_root_count(nctx: NumericContext, p: UniPoly, imag_tol: float = 1e-20) -> int:
    """Roots with |Im| < imag_tol; the numeric counterpart of a Sturm count."""
    return sum(1 for z, _ in root_find(nctx, p) if abs(nctx.mp.im(z)) < imag_tol)
