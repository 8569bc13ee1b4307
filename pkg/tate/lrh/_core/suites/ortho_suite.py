"""
tate.lrh._core.suites.ortho_suite
=================================
Orthogonality of the critical-line restrictions ρ_m for |Γ((k+1)/2 + it)|² dt.
"""

from __future__ import annotations

from tate.core.base_suite import BaseSuite
from tate.core.data_types import SuiteResult
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.orthogonality import orthogonality_check, orthogonality_ratio
from tate.lrh._core.zeta.zeta_poly import is_admissible


class OrthoSuite(BaseSuite):
    """All admissible pairs m, m2 <= min(grid m_max, orthogonality m_max) per k."""

    suite_name    = "ortho"
    suite_version = "1.0.0"
    depends_on    = []
    log_operation = "ortho_pair"

    def initialize(self) -> "OrthoSuite":
        self._nctx = NumericContext(self._config.precision_bits)
        return super().initialize()

    def _execute(self, result: SuiteResult) -> None:
        cfg = self._config
        limit = min(cfg.m_max, cfg.ortho_m_max)
        tol = cfg.tolerance("orthogonality")
        worst = 0.0
        pairs = 0
        for k in cfg.ortho_k_values:
            ms = [m for m in range(limit + 1) if is_admissible(m, k)]
            for i, m in enumerate(ms):
                for m2 in ms[i:]:
                    subject = {"m": m, "m2": m2, "k": k}
                    ok = self._check(result, "orthogonality", subject,
                                     orthogonality_check, self._nctx, m, m2, k, tol)
                    if ok and m != m2:
                        pairs += 1
                        worst = max(worst, orthogonality_ratio(self._nctx, m, m2, k))
        result.details = {
            "m_limit":       limit,
            "k_values":      list(cfg.ortho_k_values),
            "offdiag_pairs": pairs,
            "worst_ratio":   worst,
        }
