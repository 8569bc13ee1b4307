"""
tate.lrh._core.suites.lrh_suite
===============================
The per-(m, k) certificate that every zero of p_m^(k) lies on Re(s) = 1/2.

For an admissible pair the polynomial is built by both routes, the
functional equation and the symmetry are checked exactly, and the real
polynomial ρ(t) = (-i)^d p(1/2 + it) is Sturm-counted on the Cauchy window.
d distinct real roots of ρ are d distinct zeros of p on the critical line.
The Aberth roots of p are recorded alongside as numeric residuals.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import List, Tuple

from tate.core.base_suite import BaseSuite
from tate.core.data_types import SuiteResult, VerifyReport
from tate.core.exceptions import TateBaseError
from tate.lrh._core.analytic.context import DEFAULT_PRECISION_BITS, NumericContext
from tate.lrh._core.analytic.roots import root_find
from tate.lrh._core.exact.scalars import format_rational
from tate.lrh._core.exact.sturm import count_real_roots, squarefree_check
from tate.lrh._core.exact.unipoly import critical_line_restriction
from tate.lrh._core.zeta.zeta_poly import (
    functional_equation_check,
    symmetry_check,
    vanishing_law_check,
    zeta_poly_expansion,
    zeta_poly_recurrence,
)

CONTEXT_CACHE_SIZE = 4


@lru_cache(maxsize=CONTEXT_CACHE_SIZE)
def _context(precision_bits: int) -> NumericContext:
    """NumericContext reused across calls in one worker process, per precision."""
    return NumericContext(precision_bits)


def lrh_verify(
    m: int,
    k: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    numeric: bool = True,
) -> VerifyReport:
    """
    Build the certificate report for (m, k). Never raises on a failed
    identity: every failure is recorded on report.failures.
    """
    started = time.perf_counter()
    expansion = zeta_poly_expansion(m, k)
    report = VerifyReport(m=m, k=k, degree=expansion.degree, vacuous=expansion.is_zero)

    def attempt(step: str, fn, *args) -> bool:
        try:
            fn(*args)
        except TateBaseError as exc:
            report.failures.append(f"{step}: {exc}")
            return False
        return True

    report.vanishing_law = attempt("vanishing_law", vanishing_law_check, expansion)
    if expansion.is_zero:
        report.timing_ms = (time.perf_counter() - started) * 1000.0
        return report

    p, d = expansion.coeffs, expansion.degree
    report.coeffs = [format_rational(c) for c in p.coeffs]

    try:
        recurrence = zeta_poly_recurrence(m, k)
        report.route_agreement = recurrence.coeffs == p
        if not report.route_agreement:
            report.failures.append(f"route_agreement: recurrence gives {recurrence.coeffs}")
    except TateBaseError as exc:
        report.failures.append(f"route_agreement: {exc}")

    report.functional_eq = attempt("functional_eq", functional_equation_check, expansion)
    report.symmetry = attempt("symmetry", symmetry_check, expansion)

    try:
        rho = critical_line_restriction(p, d)
        report.sturm_real_roots = count_real_roots(rho)
        report.distinct = squarefree_check(rho)
    except TateBaseError as exc:
        report.symmetry = False
        report.failures.append(f"sturm: {exc}")

    report.lrh_certified = (
        report.sturm_real_roots == d and report.distinct and report.symmetry
    )
    if not report.lrh_certified:
        report.failures.append(
            f"lrh: {report.sturm_real_roots} real roots of rho for degree {d}"
        )

    if numeric and d >= 1:
        try:
            nctx = _context(precision_bits)
            roots = root_find(nctx, p)
            half = nctx.mp.mpf(1) / 2
            report.numeric_residuals["max_root_residual"] = max(res for _, res in roots)
            report.numeric_residuals["max_offline"] = float(
                max(abs(nctx.mp.re(z) - half) for z, _ in roots)
            )
        except TateBaseError as exc:
            report.failures.append(f"root_find: {exc}")

    report.timing_ms = (time.perf_counter() - started) * 1000.0
    return report


def _verify_task(task: Tuple[int, int, int]) -> VerifyReport:
    m, k, precision_bits = task
    return lrh_verify(m, k, precision_bits)


def verify_grid(pairs: List[Tuple[int, int]], precision_bits: int, parallelism: int) -> List[VerifyReport]:
    """Reports for every pair, sorted by (m, k) whatever the completion order."""
    tasks = [(m, k, precision_bits) for m, k in pairs]
    if parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=4))
    else:
        reports = [_verify_task(t) for t in tasks]
    return sorted(reports, key=lambda r: (r.m, r.k))


class LRHSuite(BaseSuite):
    """Certificate reports over the configured (m, k) grid."""

    suite_name    = "lrh"
    suite_version = "1.0.0"
    depends_on    = []
    log_operation = "lrh_verify"

    def _execute(self, result: SuiteResult) -> None:
        cfg = self._config
        reports = verify_grid(cfg.grid(), cfg.precision_bits, cfg.parallelism)
        root_tol = cfg.tolerance("root_residual")
        for report in reports:
            residual = report.numeric_residuals.get("max_root_residual", 0.0)
            if residual > root_tol:
                report.failures.append(f"root_residual: {residual:.3e} > {root_tol:.1e}")
            result.checks += 1
            self._logger.log(
                self.log_operation,
                level="INFO" if report.passed else "ERROR",
                m=report.m,
                k=report.k,
                vacuous=report.vacuous,
                certified=report.lrh_certified,
            )
        result.reports = reports
        result.details = {
            "pairs":      len(reports),
            "nonvacuous": sum(1 for r in reports if not r.vacuous),
            "certified":  sum(1 for r in reports if r.lrh_certified),
        }
