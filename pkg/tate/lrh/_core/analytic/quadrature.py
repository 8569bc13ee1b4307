"""
tate.lrh._core.analytic.quadrature
==================================
Adaptive quadrature with an evaluation budget and a counted integrand.
"""

from __future__ import annotations

from typing import Callable, Sequence

from tate.core.data_types import QuadratureResult
from tate.core.exceptions import NonConvergentError
from tate.lrh._core.analytic.context import NumericContext

DEFAULT_MAX_DEGREE = 10


class _Counted:
    def __init__(self, fn: Callable):
        self.fn = fn
        self.calls = 0

    def __call__(self, *args):
        self.calls += 1
        return self.fn(*args)


def integrate(
    nctx: NumericContext,
    fn: Callable,
    points: Sequence,
    tol: float,
    max_degree: int = DEFAULT_MAX_DEGREE,
    extra_error: float = 0.0,
    relative: bool = False,
) -> QuadratureResult:
    """
    ∫ fn over the piecewise interval given by points (tanh-sinh).

    extra_error (e.g. a truncated tail) is added to the quadrature's own
    error estimate. With relative=True the tolerance scales with max(1, |value|).

    Raises
    ------
    NonConvergentError
        If the combined estimate exceeds tol at max_degree.
    """
    mp = nctx.mp
    counted = _Counted(fn)
    value, err = mp.quad(counted, list(points), error=True, maxdegree=max_degree)
    estimate = float(err) + float(extra_error)
    budget = tol * max(1.0, float(abs(value))) if relative else tol
    if estimate > budget:
        raise NonConvergentError(
            "quadrature did not reach tolerance",
            details={"estimate": estimate, "tol": tol, "evaluations": counted.calls},
        )
    return QuadratureResult(value=value, error_estimate=estimate, evaluations=counted.calls)
