"""
tate.lrh._core.suites.oracle_suite
==================================
Numeric oracles for the exact factorization ζ(s, ν_k, f) = c_{f,k} ζ_m^(k)(s):

  * ratio constancy for f_{m,0} over the sample points (quadrature),
  * ratio constancy for random elements of W_m,
  * quadrature against the Mellin closed form,
  * the functional equation at the zeta level,
  * the radial twist ζ(s, r^{iα} ν_k, f) = ζ(s + iα/2, ν_k, f).
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from tate.core.base_suite import BaseSuite
from tate.core.data_types import SuiteResult
from tate.core.exceptions import IdentityViolatedError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.zeta_numeric import (
    functional_equation_numeric,
    radial_coefficients,
    ratio_spread,
    zeta_closed_form,
    zeta_numeric,
    zeta_ratio_scan,
)
from tate.lrh._core.exact.scalars import GaussianRational
from tate.lrh._core.weil.hermgauss import HermGaussFn, hermite_fn
from tate.lrh._core.zeta.zeta_poly import is_admissible

FUNCTIONAL_EQ_POINTS = (complex(0.3, 0.7), complex(1.25, -0.5), complex(2.5, 1.5))
TWIST_ALPHA = 0.7
TWIST_POINT = complex(1.25, 0.25)


def random_w_element(rng: np.random.Generator, m: int) -> HermGaussFn:
    """Σ_j c_j f_{j,m-j} with Gaussian-integer c_j in [-5, 5] + i[-5, 5]."""
    f = HermGaussFn.zero()
    for j in range(m + 1):
        re, im = (int(x) for x in rng.integers(-5, 6, size=2))
        f = f + hermite_fn(j, m - j) * GaussianRational(re, im)
    return f


def random_w_instances(seed: int, count: int, m_max: int) -> List[Tuple[int, int, HermGaussFn]]:
    """
    count triples (m, k, f) with f a random element of W_m whose k-projection
    is nonzero; deterministic in seed.
    """
    rng = np.random.default_rng(seed)
    out: List[Tuple[int, int, HermGaussFn]] = []
    while len(out) < count and m_max >= 0:
        m = int(rng.integers(0, m_max + 1))
        k = int(rng.choice([k for k in range(m + 1) if is_admissible(m, k)]))
        f = random_w_element(rng, m)
        if radial_coefficients(f, k):
            out.append((m, k, f))
    return out


def _require_spread(ratios, tol: float, **subject) -> float:
    spread = ratio_spread(ratios)
    if spread > tol:
        raise IdentityViolatedError(
            "zeta ratios are not constant",
            details={**subject, "residual": spread},
        )
    return spread


class OracleSuite(BaseSuite):
    """Quadrature and closed-form oracles against the exact polynomials."""

    suite_name    = "oracle"
    suite_version = "1.0.0"
    depends_on    = ["lrh"]
    log_operation = "oracle_scan"

    def initialize(self) -> "OracleSuite":
        self._nctx = NumericContext(self._config.precision_bits)
        return super().initialize()

    def _execute(self, result: SuiteResult) -> None:
        cfg = self._config
        nctx = self._nctx
        limit = min(cfg.m_max, cfg.oracle_m_max)
        samples = cfg.sample_points()
        spread_tol = cfg.tolerance("ratio_spread")
        quad_tol = cfg.tolerance("quadrature")
        worst = {"spread": 0.0, "closed_form": 0.0, "functional_eq": 0.0, "twist": 0.0}

        def scan(f, m, k):
            ratios = zeta_ratio_scan(nctx, f, m, k, samples, tol=quad_tol)
            worst["spread"] = max(worst["spread"], _require_spread(ratios, spread_tol, m=m, k=k))

        def closed_form(f, k, s):
            numeric = zeta_numeric(nctx, f, k, s, tol=quad_tol).value
            exact = zeta_closed_form(nctx, f, k, s)
            rel = float(abs(numeric - exact) / max(abs(exact), nctx.mp.mpf(1)))
            worst["closed_form"] = max(worst["closed_form"], rel)
            if rel > spread_tol:
                raise IdentityViolatedError("quadrature disagrees with closed form",
                                            details={"k": k, "s": str(s), "residual": rel})

        def functional_eq(m, k):
            for s in FUNCTIONAL_EQ_POINTS:
                rel = functional_equation_numeric(nctx, m, k, s)
                worst["functional_eq"] = max(worst["functional_eq"], rel)
                if rel > cfg.tolerance("functional_eq"):
                    raise IdentityViolatedError("zeta functional equation fails",
                                                details={"m": m, "k": k, "s": str(s), "residual": rel})

        def twist(f, k):
            twisted = zeta_numeric(nctx, f, k, TWIST_POINT, alpha=TWIST_ALPHA, tol=quad_tol).value
            shifted = zeta_closed_form(nctx, f, k, TWIST_POINT + complex(0, TWIST_ALPHA / 2))
            rel = float(abs(twisted - shifted) / max(abs(shifted), nctx.mp.mpf(1)))
            worst["twist"] = max(worst["twist"], rel)
            if rel > spread_tol:
                raise IdentityViolatedError("radial twist is not a shift in s",
                                            details={"k": k, "residual": rel})

        for m in range(limit + 1):
            f = hermite_fn(m, 0)
            for k in range(m + 1):
                if not is_admissible(m, k):
                    continue
                subject = {"m": m, "k": k}
                self._check(result, "ratio_scan", subject, scan, f, m, k)
                self._check(result, "closed_form", subject, closed_form, f, k, samples[0])
                self._check(result, "functional_eq", subject, functional_eq, m, k)
                self._check(result, "twist", subject, twist, f, k)

        instances = random_w_instances(cfg.oracle_seed, cfg.random_elements, limit)
        for index, (m, k, f) in enumerate(instances):
            self._check(result, "random_w_scan", {"index": index, "m": m, "k": k}, scan, f, m, k)

        result.details = {
            "m_limit":          limit,
            "samples":          [[s.real, s.imag] for s in samples],
            "random_instances": len(instances),
            "worst":            worst,
        }
