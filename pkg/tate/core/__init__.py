"""tate.core — Foundation layer for all tatezeta modules."""

from tate.core.data_types import (
    NORMALIZATION,
    OutputFormat,
    QuadratureResult,
    Route,
    RunResult,
    SuiteResult,
    VerifyReport,
    ZetaPolyRecord,
)
from tate.core.exceptions import (
    ConfigError,
    DegenerateEigenspaceError,
    DomainError,
    EndpointRootError,
    IdentityViolatedError,
    NoConvergenceError,
    NonConvergentError,
    NonRealRestrictionError,
    PoleProximityError,
    PropertyViolatedError,
    ReportError,
    TateBaseError,
)
from tate.core.base_suite import BaseSuite
from tate.core.suite_pipeline import SuitePipeline
from tate.core.config_loader import load_config
from tate.core.logger import StructuredLogger

__all__ = [
    "NORMALIZATION",
    "OutputFormat",
    "QuadratureResult",
    "Route",
    "RunResult",
    "SuiteResult",
    "VerifyReport",
    "ZetaPolyRecord",
    "ConfigError",
    "DegenerateEigenspaceError",
    "DomainError",
    "EndpointRootError",
    "IdentityViolatedError",
    "NoConvergenceError",
    "NonConvergentError",
    "NonRealRestrictionError",
    "PoleProximityError",
    "PropertyViolatedError",
    "ReportError",
    "TateBaseError",
    "BaseSuite",
    "SuitePipeline",
    "load_config",
    "StructuredLogger",
]
