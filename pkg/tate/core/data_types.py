"""
tate.core.data_types
====================
Core data structures shared by the tatezeta modules and suites.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Dict, List, Optional

if TYPE_CHECKING:
    from tate.lrh._core.exact.unipoly import UniPoly


# ── Enums (as string constants) ───────────────────────────────────────────────

class Route:
    EXPANSION  = "expansion"
    RECURRENCE = "recurrence"


class OutputFormat:
    JSON = "json"
    CSV  = "csv"
    TEXT = "text"

    ALL = ("json", "csv", "text")


NORMALIZATION = "primitive-positive-leading"


# ── Zeta polynomial record ────────────────────────────────────────────────────

@dataclass(frozen=True)
class ZetaPolyRecord:
    """
    The polynomial factor p_m^(k)(s) of zeta_m^(k)(s) = Γ(s+k/2) π^(1-s) p(s).

    Attributes:
        m, k    : Hermite degree and character index.
        degree  : (m-k)/2, or -1 for a vacuous pair.
        coeffs  : UniPoly in s, primitive integer coefficients with positive
                  leading coefficient; the zero polynomial when is_zero.
        route   : Route.EXPANSION or Route.RECURRENCE.
        is_zero : True iff k > m or m - k is odd.
    """
    m:       int
    k:       int
    degree:  int
    coeffs:  "UniPoly"
    route:   str
    is_zero: bool = False

    def __repr__(self) -> str:
        body = "0" if self.is_zero else str(self.coeffs)
        return f"ZetaPolyRecord(m={self.m}, k={self.k}, route={self.route!r}, p={body})"


# ── Numeric results ───────────────────────────────────────────────────────────

@dataclass(frozen=True)
class QuadratureResult:
    """
    Outcome of one adaptive quadrature.

    Attributes:
        value          : mpmath mpc value.
        error_estimate : nonnegative bound on quadrature plus truncation error.
        evaluations    : number of integrand evaluations spent.
    """
    value:          Any
    error_estimate: float
    evaluations:    int

    def __post_init__(self):
        if self.error_estimate < 0:
            object.__setattr__(self, "error_estimate", abs(self.error_estimate))


# ── Verification reports ──────────────────────────────────────────────────────

@dataclass
class VerifyReport:
    """
    Per-(m, k) certificate that all zeros of p_m^(k) lie on Re(s) = 1/2.

    lrh_certified == (sturm_real_roots == degree) and distinct and symmetry.
    Vacuous pairs (k > m or parity mismatch) carry vacuous=True and pass iff
    the vanishing law held.
    """
    m:                 int
    k:                 int
    degree:            int
    vacuous:           bool                 = False
    vanishing_law:     bool                 = False
    route_agreement:   bool                 = False
    functional_eq:     bool                 = False
    symmetry:          bool                 = False
    sturm_real_roots:  int                  = 0
    distinct:          bool                 = False
    lrh_certified:     bool                 = False
    coeffs:            List[str]            = field(default_factory=list)
    numeric_residuals: Dict[str, float]     = field(default_factory=dict)
    failures:          List[str]            = field(default_factory=list)
    timing_ms:         float                = 0.0

    @property
    def passed(self) -> bool:
        if self.failures:
            return False
        if self.vacuous:
            return self.vanishing_law
        return (
            self.lrh_certified
            and self.route_agreement
            and self.functional_eq
        )

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        out = {
            "m":                 self.m,
            "k":                 self.k,
            "degree":            self.degree,
            "vacuous":           self.vacuous,
            "vanishing_law":     self.vanishing_law,
            "route_agreement":   self.route_agreement,
            "functional_eq":     self.functional_eq,
            "symmetry":          self.symmetry,
            "sturm_real_roots":  self.sturm_real_roots,
            "distinct":          self.distinct,
            "lrh_certified":     self.lrh_certified,
            "coeffs":            list(self.coeffs),
            "numeric_residuals": dict(self.numeric_residuals),
            "failures":          list(self.failures),
            "passed":            self.passed,
        }
        if include_timing:
            out["timing_ms"] = self.timing_ms
        return out


@dataclass
class SuiteResult:
    """
    Result of one verification suite.

    Attributes:
        name      : Suite name (e.g. "lrh", "weil").
        checks    : Number of individual checks performed.
        failures  : One dict per failed check (check, subject, error).
        details   : Suite-specific summary values.
        reports   : Per-(m, k) reports (lrh suite only).
        timing_ms : Wall time of the suite.
        skipped   : True when the suite did not run because a dependency failed.
    """
    name:      str
    checks:    int                       = 0
    failures:  List[Dict[str, Any]]      = field(default_factory=list)
    details:   Dict[str, Any]            = field(default_factory=dict)
    reports:   List[VerifyReport]        = field(default_factory=list)
    timing_ms: float                     = 0.0
    skipped:   bool                      = False

    @property
    def passed(self) -> bool:
        return not self.failures and all(r.passed for r in self.reports)

    def record_failure(self, check: str, subject: Any, error: Exception) -> None:
        self.failures.append({
            "check":   check,
            "subject": subject,
            "error":   str(error),
        })

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        out = {
            "name":     self.name,
            "passed":   self.passed,
            "checks":   self.checks,
            "failures": list(self.failures),
            "details":  dict(self.details),
            "reports":  [r.to_dict(include_timing) for r in self.reports],
            "skipped":  self.skipped,
        }
        if include_timing:
            out["timing_ms"] = self.timing_ms
        return out


@dataclass
class RunResult:
    """Aggregate of every suite executed by one run."""
    suites: List[SuiteResult] = field(default_factory=list)
    config: Dict[str, Any]    = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def reports(self) -> List[VerifyReport]:
        return [r for s in self.suites for r in s.reports]

    def suite(self, name: str) -> Optional[SuiteResult]:
        for s in self.suites:
            if s.name == name:
                return s
        return None

    def summary(self) -> Dict[str, Any]:
        reports = self.reports()
        return {
            "passed":          self.passed,
            "suites":          {s.name: s.passed for s in self.suites},
            "checks":          sum(s.checks for s in self.suites),
            "failures":        sum(len(s.failures) for s in self.suites),
            "pairs":           len(reports),
            "nonvacuous":      sum(1 for r in reports if not r.vacuous),
            "certified":       sum(1 for r in reports if r.lrh_certified),
        }

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            "summary": self.summary(),
            "config":  dict(self.config),
            "suites":  [s.to_dict(include_timing) for s in self.suites],
        }
