"""
tate.lrh._core.weil.fourier
===========================
The Fourier transform f̂(z) = ∫ f(z′) ψ(2zz′) dz′ with ψ(z) = e^(iπ Re z).

The kernel is e^(2πi(xx′ - yy′)), so f_{m,n} is an eigenfunction with
eigenvalue i^(m-n). The symbolic transform uses that eigen-expansion;
fourier_quadrature_validate compares it against numerical integration of
the defining kernel.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

from tate.core.exceptions import IdentityViolatedError
from tate.lrh._core.exact.scalars import i_power, to_mp
from tate.lrh._core.weil.hermgauss import HermGaussFn, expand_in_hermite, hermite_fn


def fourier_transform(f: HermGaussFn) -> HermGaussFn:
    """Exact f̂: multiply the f_{m,n} component by i^(m-n)."""
    return expand_in_hermite(f).scale_each(lambda m, n: i_power(m - n)).to_function()


def inverse_fourier_transform(f: HermGaussFn) -> HermGaussFn:
    return expand_in_hermite(f).scale_each(lambda m, n: i_power(n - m)).to_function()


def _hermite_function_transform(ctx, order: int, point, sign: int):
    """
    ∫ H_order(√(2π) t) e^(-π t²) e^(sign·2πi·point·t) dt by adaptive quadrature.
    """
    scale = ctx.sqrt(2 * ctx.pi)

    def integrand(t):
        return (
            ctx.hermite(order, scale * t)
            * ctx.exp(-ctx.pi * t * t)
            * ctx.expj(sign * 2 * ctx.pi * point * t)
        )

    return ctx.quad(integrand, [-ctx.inf, 0, ctx.inf])


def fourier_quadrature_validate(
    ctx,
    orders: Iterable[Tuple[int, int]] = ((0, 0), (1, 0), (0, 1), (1, 1)),
    points: Iterable[Tuple[float, float]] = ((0.3, -0.2), (0.7, 0.4)),
    tol: float = 1e-20,
) -> List[float]:
    """
    Check f̂_{m,n}(z) = i^(m-n) f_{m,n}(z) numerically at the given points.

    The kernel factorizes as e^(2πi xx′)·e^(-2πi yy′) and f_{m,n} is a
    product, so the plane integral is the product of two line integrals.
    Returns the relative errors.

    Raises
    ------
    IdentityViolatedError
        If any relative error exceeds tol.
    """
    errors: List[float] = []
    for m, n in orders:
        f = hermite_fn(m, n)
        eigen = to_mp(ctx, i_power(m - n))
        for x, y in points:
            x, y = ctx.mpf(x), ctx.mpf(y)
            numeric = (
                _hermite_function_transform(ctx, m, x, +1)
                * _hermite_function_transform(ctx, n, y, -1)
            )
            exact = eigen * f.evaluate(ctx, x, y)
            err = float(abs(numeric - exact) / max(abs(exact), ctx.mpf(1)))
            errors.append(err)
            if err > tol:
                raise IdentityViolatedError(
                    "Fourier eigenvalue disagrees with quadrature",
                    details={"m": m, "n": n, "point": (float(x), float(y)), "residual": err},
                )
    return errors
