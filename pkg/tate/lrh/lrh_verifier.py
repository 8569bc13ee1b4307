"""
tate.lrh.lrh_verifier
=====================
LocalRHVerifier — the main class.
Wires the exact zeta polynomials, the Weil-representation identities, the
high-precision numerics and the report writers into verification runs.

Public API:
  generate(m, k, route)                 → ZetaPolyRecord
  lrh_verify(m, k)                      → VerifyReport
  run_suite(suites)                     → RunResult
  export_table(pairs, path, fmt)        → Path
  eval(m, k, s)                         → dict
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Type, Union

from tate.core.base_suite import BaseSuite
from tate.core.data_types import Route, RunResult, VerifyReport, ZetaPolyRecord
from tate.core.exceptions import ConfigError, DomainError
from tate.core.logger import StructuredLogger
from tate.core.suite_pipeline import SuitePipeline
from tate.lrh.config.run_config import RunConfig
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.zeta_numeric import zeta_closed_form, zeta_mk, zeta_numeric
from tate.lrh._core.report.tables import export_table
from tate.lrh._core.report.writers import write_run
from tate.lrh._core.suites import (
    LRHSuite,
    OracleSuite,
    OrthoSuite,
    StripSuite,
    WeilSuite,
    lrh_verify,
)
from tate.lrh._core.weil.hermgauss import hermite_fn
from tate.lrh._core.zeta.zeta_poly import zeta_poly

SUITES: Dict[str, Type[BaseSuite]] = {
    "lrh":    LRHSuite,
    "weil":   WeilSuite,
    "ortho":  OrthoSuite,
    "oracle": OracleSuite,
    "strip":  StripSuite,
}


class LocalRHVerifier:
    """
    Builds p_m^(k) and certifies that its zeros lie on Re(s) = 1/2.

    Usage
    -----
    # Simple (preset)
    verifier = LocalRHVerifier(config="quick")

    # Advanced (dict)
    verifier = LocalRHVerifier(config={
        "grid":    {"m_max": 12},
        "numeric": {"precision_bits": 160},
        "output":  {"format": "csv", "path": "reports/run.csv"},
    })

    rec = verifier.generate(4, 0)          # 2s² - 2s + 1
    report = verifier.lrh_verify(4, 0)     # report.lrh_certified → True
    result = verifier.run_suite()
    sys.exit(result.exit_code)
    """

    def __init__(
        self,
        config: Union[str, Dict[str, Any], RunConfig, None] = None,
        logger: Optional[StructuredLogger] = None,
    ):
        """
        Parameters
        ----------
        config : str, dict, RunConfig, or None
            str  → preset name ("default", "quick", "full") or YAML path
            dict → raw config dict
            RunConfig → already-built config object
            None → default preset values
        logger : StructuredLogger or None
            Shared run logger; created from runtime.console_log when omitted.
        """
        self._cfg = config if isinstance(config, RunConfig) else RunConfig(config)
        self._logger = logger or StructuredLogger(name="tate.lrh", console=self._cfg.console_log)
        self._nctx: Optional[NumericContext] = None

    @property
    def config(self) -> RunConfig:
        return self._cfg

    @property
    def logger(self) -> StructuredLogger:
        return self._logger

    @property
    def numeric(self) -> NumericContext:
        if self._nctx is None or self._nctx.precision_bits != self._cfg.precision_bits:
            self._nctx = NumericContext(self._cfg.precision_bits)
        return self._nctx

    # ── Public API ────────────────────────────────────────────────────────────

    def generate(self, m: int, k: int, route: str = Route.EXPANSION) -> ZetaPolyRecord:
        """p_m^(k) by the requested route; the zero record for a vacuous pair."""
        rec = zeta_poly(m, k, route)
        self._logger.log("generate", m=m, k=k, route=route, degree=rec.degree, zero=rec.is_zero)
        return rec

    def lrh_verify(self, m: int, k: int) -> VerifyReport:
        """Exact certificate for one pair (see lrh_suite.lrh_verify)."""
        report = lrh_verify(m, k, self._cfg.precision_bits)
        self._logger.log(
            "lrh_verify",
            level="INFO" if report.passed else "ERROR",
            m=m,
            k=k,
            certified=report.lrh_certified,
            vacuous=report.vacuous,
        )
        return report

    def run_suite(self, suites: Optional[Iterable[str]] = None, write: bool = True) -> RunResult:
        """
        Run the named suites (default: every suite enabled in the config)
        and write the report to output.path when set.

        Parameters
        ----------
        suites : iterable of str or None
            Subset of "lrh", "weil", "ortho", "oracle", "strip", run in
            that order whatever order they are given in.
        write : bool
            False skips the report file even when output.path is set.

        Raises
        ------
        ConfigError
            For an unknown suite name.
        ReportError
            If the report cannot be written.
        """
        names = self._suite_names(suites)
        pipeline = SuitePipeline(
            [SUITES[name](self._cfg, self._logger) for name in names],
            config=self._cfg.to_dict(),
        )
        result = pipeline.run()
        self._logger.log(
            "run_done",
            level="INFO" if result.passed else "ERROR",
            **result.summary(),
        )
        if write and self._cfg.output_path:
            write_run(result, self._cfg.output_path, self._cfg.output_format, self._cfg.include_timing)
        return result

    def export_table(
        self,
        pairs: Sequence[Tuple[int, int]],
        path: Union[str, Path],
        fmt: Optional[str] = None,
    ) -> Path:
        """Canonical golden table for the admissible pairs among pairs."""
        records = [self.generate(m, k) for m, k in pairs]
        records = [rec for rec in records if not rec.is_zero] or records
        return export_table(records, path, fmt or self._cfg.output_format, self.numeric)

    def eval(self, m: int, k: int, s) -> Dict[str, Any]:
        """
        Compare ζ(s, ν_k, f_{m,0}) with its exact factorization at one point.

        Returns a dict of strings: the exact value ζ_m^(k)(s), the closed
        form, the quadrature value (when Re s > 0) and the ratio
        quadrature / exact, which is the constant c_{f,k}.
        """
        nctx = self.numeric
        mp = nctx.mp
        s = nctx.parse(s)
        f = hermite_fn(m, 0)
        exact = zeta_mk(nctx, m, k, s)
        closed = zeta_closed_form(nctx, f, k, s)
        out: Dict[str, Any] = {
            "m": m,
            "k": k,
            "s": mp.nstr(s, 15),
            "exact": mp.nstr(exact, 20),
            "closed_form": mp.nstr(closed, 20),
            "numeric": None,
            "error_estimate": None,
            "ratio": None,
        }
        if mp.re(s) > 0:
            quad = zeta_numeric(nctx, f, k, s, tol=self._cfg.tolerance("quadrature"))
            out["numeric"] = mp.nstr(quad.value, 20)
            out["error_estimate"] = f"{quad.error_estimate:.3e}"
            if exact != 0:
                out["ratio"] = mp.nstr(quad.value / exact, 20)
        self._logger.log("eval", m=m, k=k, s=out["s"])
        return out

    # ── Internals ─────────────────────────────────────────────────────────────

    def _suite_names(self, suites: Optional[Iterable[str]]) -> List[str]:
        if suites is None:
            enabled = {
                "lrh":    True,
                "weil":   self._cfg.weil_enabled,
                "ortho":  self._cfg.ortho_enabled,
                "oracle": self._cfg.oracle_enabled,
                "strip":  self._cfg.strip_enabled,
            }
            return [name for name in SUITES if enabled[name]]
        wanted = set(suites)
        unknown = wanted - set(SUITES)
        if unknown:
            raise ConfigError(
                f"Unknown suite(s): {sorted(unknown)}",
                details={"allowed": list(SUITES)},
            )
        if not wanted:
            raise DomainError("run_suite needs at least one suite")
        return [name for name in SUITES if name in wanted]

    def __repr__(self) -> str:
        return f"LocalRHVerifier({self._cfg!r})"
