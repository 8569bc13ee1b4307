"""
tate.lrh — THE BOUNDARY FILE
============================
Package boundary. Exports public API only.
Everything inside _core/ is private and should NOT be imported directly.

PUBLIC API:
  LocalRHVerifier   — main verifier class
  RunConfig         — typed config builder
  ZetaPolyRecord    — returned by generate()
  VerifyReport      — returned by lrh_verify()
  RunResult         — returned by run_suite()
  BaseSuite         — base class for extra verification suites
  TateBaseError     — root of every error raised by the package
"""

from tate.lrh.lrh_verifier import LocalRHVerifier
from tate.lrh.config.run_config import RunConfig
from tate.core.base_suite import BaseSuite
from tate.core.data_types import RunResult, VerifyReport, ZetaPolyRecord
from tate.core.exceptions import TateBaseError

__all__ = [
    "LocalRHVerifier",
    "RunConfig",
    "ZetaPolyRecord",
    "VerifyReport",
    "RunResult",
    "BaseSuite",
    "TateBaseError",
]
