"""
tate.lrh._core.suites.strip_suite
=================================
Seeded property harness for strip shrinking: if every zero of q has
Re(s) ∈ [-c, c] and a, b > 0, every zero of

    r(s) = (s + a) q(s + b) - (s - a) q(s - b)

has Re(s) ∈ (-c, c). q is built from roots drawn inside the closed strip,
so the hypothesis holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from tate.core.base_suite import BaseSuite
from tate.core.data_types import SuiteResult
from tate.core.exceptions import DomainError, PropertyViolatedError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.roots import root_find
from tate.lrh._core.exact.scalars import GaussianRational, Scalar, coerce
from tate.lrh._core.exact.unipoly import UniPoly, poly_shift

MAX_DEGREE = 6
STRIP_MARGIN = 1e-20
IMAG_HALF_HEIGHT = 5
RE_GRID = 64


@dataclass(frozen=True)
class StripInstance:
    trial: int
    a:     Fraction
    b:     Fraction
    c:     Fraction
    roots: tuple

    @property
    def q(self) -> UniPoly:
        q = UniPoly.constant(1)
        for z in self.roots:
            q = q * UniPoly.linear(1, -z)
        return q

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trial": self.trial,
            "a":     str(self.a),
            "b":     str(self.b),
            "c":     str(self.c),
            "roots": [str(z) for z in self.roots],
        }


def shrink_image(q: UniPoly, a, b) -> UniPoly:
    """r(s) = (s + a) q(s + b) - (s - a) q(s - b); degree deg q, leading 2(a + n·b)·lead(q)."""
    s = UniPoly.identity("s")
    return (s + a) * poly_shift(q, b) - (s - a) * poly_shift(q, -b)


def sample_instance(rng: np.random.Generator, trial: int) -> StripInstance:
    """c ∈ [1/4, 3], a, b ∈ [1/8, 5], roots in [-c, c] × [-5, 5] with rational parts."""
    degree = int(rng.integers(0, MAX_DEGREE + 1))
    c = Fraction(int(rng.integers(1, 13)), 4)
    a = Fraction(int(rng.integers(1, 41)), 8)
    b = Fraction(int(rng.integers(1, 41)), 8)
    roots: List[Scalar] = []
    for _ in range(degree):
        re = c * Fraction(int(rng.integers(-RE_GRID, RE_GRID + 1)), RE_GRID)
        im = Fraction(int(rng.integers(-8 * IMAG_HALF_HEIGHT, 8 * IMAG_HALF_HEIGHT + 1)), 8)
        roots.append(coerce(GaussianRational(re, im)))
    return StripInstance(trial=trial, a=a, b=b, c=c, roots=tuple(roots))


def check_instance(nctx: NumericContext, inst: StripInstance) -> Optional[Dict[str, Any]]:
    """None when every root of r lies inside the open strip; else the counterexample."""
    r = shrink_image(inst.q, inst.a, inst.b)
    if r.degree < 1:
        return None
    c = nctx.to_mp(inst.c)
    margin = nctx.mp.mpf(STRIP_MARGIN)
    for z, _ in root_find(nctx, r):
        if not (-c + margin < nctx.mp.re(z) < c - margin):
            return {**inst.to_dict(), "offending_root": str(z)}
    return None


def strip_shrink_property(trials: int, seed: int, nctx: Optional[NumericContext] = None) -> bool:
    """
    Run the seeded harness.

    Raises
    ------
    DomainError
        If trials < 1.
    PropertyViolatedError
        With the first counterexample in details["counterexample"].
    """
    if trials < 1:
        raise DomainError("strip_shrink_property needs trials >= 1", details={"trials": trials})
    nctx = nctx or NumericContext()
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        bad = check_instance(nctx, sample_instance(rng, trial))
        if bad is not None:
            raise PropertyViolatedError(
                "root of r outside the open strip",
                details={"seed": seed, "counterexample": bad},
            )
    return True


class StripSuite(BaseSuite):
    """strip_shrink_property at the configured trial count and seed."""

    suite_name    = "strip"
    suite_version = "1.0.0"
    depends_on    = []
    log_operation = "strip_trial"

    def _execute(self, result: SuiteResult) -> None:
        cfg = self._config
        nctx = NumericContext(cfg.precision_bits)
        self._check(result, "strip_shrink", {"trials": cfg.strip_trials, "seed": cfg.strip_seed},
                    strip_shrink_property, cfg.strip_trials, cfg.strip_seed, nctx)
        result.details = {"trials": cfg.strip_trials, "seed": cfg.strip_seed}
