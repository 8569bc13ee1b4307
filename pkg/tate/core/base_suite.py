"""
tate.core.base_suite
====================
Abstract base class that every verification suite inherits from.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from typing import Any, Callable, Optional

from tate.core.data_types import SuiteResult
from tate.core.exceptions import TateBaseError
from tate.core.logger import StructuredLogger


class BaseSuite(ABC):
    """
    Abstract base class for the verification suites (lrh, weil, ortho,
    oracle, strip).

    Every suite sets its manifest and implements _execute(), which fills in
    a SuiteResult. run() wraps it with lazy initialization, timing and a
    closing log entry.

    Usage
    -----
    class MySuite(BaseSuite):
        suite_name    = "my_suite"
        suite_version = "1.0.0"
        depends_on    = ["lrh"]

        def _execute(self, result: SuiteResult) -> None:
            ...
    """

    # ── Suite manifest (set by subclass) ──────────────────────────────────────
    suite_name:    str       = "unnamed"
    suite_version: str       = "0.0.0"
    depends_on:    list[str] = []
    log_operation: str       = "suite_check"

    def __init__(self, config: Any = None, logger: Optional[StructuredLogger] = None):
        """
        Parameters
        ----------
        config : RunConfig or None
            Typed run configuration; suites read only their own section.
        logger : StructuredLogger or None
            Shared run logger; entries are tagged with suite=suite_name.
            A silent one is created when omitted.
        """
        self._config = config
        self._logger = (logger or StructuredLogger()).bind(suite=self.suite_name)
        self._initialized = False

    def initialize(self) -> "BaseSuite":
        """
        Perform any lazy initialization (numeric contexts, caches).
        Called automatically by run() if not already done.
        """
        self._initialized = True
        return self

    def run(self) -> SuiteResult:
        """Execute the suite and return its SuiteResult."""
        if not self._initialized:
            self.initialize()

        result  = SuiteResult(name=self.suite_name)
        started = time.perf_counter()
        self._execute(result)
        result.timing_ms = (time.perf_counter() - started) * 1000.0

        level = "INFO" if result.passed else "ERROR"
        self._logger.log(
            "suite_done",
            level=level,
            checks=result.checks,
            failures=len(result.failures),
        )
        return result

    @abstractmethod
    def _execute(self, result: SuiteResult) -> None:
        """Run every check of the suite, recording outcomes on result."""
        ...

    def _check(
        self,
        result: SuiteResult,
        check: str,
        subject: Any,
        fn: Callable[..., Any],
        *args: Any,
        **kwargs: Any,
    ) -> bool:
        """
        Run one check, counting it on result.

        A TateBaseError becomes a recorded failure and an ERROR log entry;
        the suite keeps going.
        """
        result.checks += 1
        try:
            fn(*args, **kwargs)
        except TateBaseError as exc:
            result.record_failure(check, subject, exc)
            self._logger.error(self.log_operation, check=check, subject=subject, error=str(exc))
            return False
        self._logger.debug(self.log_operation, check=check, subject=subject)
        return True

    def skip(self, failed_dependencies: list[str]) -> SuiteResult:
        """A result for a suite that did not run because a dependency failed."""
        result = SuiteResult(name=self.suite_name, skipped=True)
        result.failures.append({
            "check":   "dependency",
            "subject": list(failed_dependencies),
            "error":   f"skipped: {', '.join(failed_dependencies)} failed",
        })
        self._logger.error("suite_skipped", failed_dependencies=list(failed_dependencies))
        return result

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"suite={self.suite_name!r}, "
            f"version={self.suite_version!r})"
        )
