"""
tate.core.suite_pipeline
========================
Runs BaseSuite instances in dependency order and aggregates a RunResult.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from tate.core.base_suite import BaseSuite
from tate.core.data_types import RunResult
from tate.core.exceptions import ConfigError


class SuitePipeline:
    """
    Runs suites so that each one follows the suites it depends on.

    A dependency counts only when it is part of the pipeline. When one
    fails, its dependents are not run; each is reported as skipped with a
    single "dependency" failure. Independent suites always run.

    Usage
    -----
    pipeline = SuitePipeline([lrh_suite, oracle_suite, strip_suite])
    result = pipeline.run()
    sys.exit(result.exit_code)
    """

    def __init__(self, suites: List[BaseSuite], config: Optional[Dict[str, Any]] = None):
        """
        Parameters
        ----------
        suites : list of BaseSuite
            Suites to run; ties in the dependency order keep this order.
        config : dict or None
            Plain-dict view of the run configuration, echoed in the result.

        Raises
        ------
        ConfigError
            If the list is empty, a name repeats or the dependencies form a cycle.
        """
        if not suites:
            raise ConfigError("SuitePipeline requires at least one suite")
        names = [s.suite_name for s in suites]
        if len(set(names)) != len(names):
            raise ConfigError("duplicate suite names", details={"suites": names})
        self._suites = _dependency_order(suites)
        self._config = config or {}

    @property
    def order(self) -> List[str]:
        return [s.suite_name for s in self._suites]

    def run(self) -> RunResult:
        """Run every suite, skipping those whose dependencies failed."""
        result = RunResult(config=dict(self._config))
        outcome: Dict[str, bool] = {}
        for suite in self._suites:
            failed = [d for d in suite.depends_on if d in outcome and not outcome[d]]
            if failed:
                suite_result = suite.skip(failed)
            else:
                suite_result = suite.run()
            outcome[suite.suite_name] = suite_result.passed
            result.suites.append(suite_result)
        return result

    def __repr__(self) -> str:
        return f"SuitePipeline([{' → '.join(self.order)}])"


def _dependency_order(suites: List[BaseSuite]) -> List[BaseSuite]:
    """Stable topological order over the dependencies present in suites."""
    present = {s.suite_name for s in suites}
    placed: List[BaseSuite] = []
    done: set = set()
    pending = list(suites)
    while pending:
        ready = [s for s in pending if all(d in done or d not in present for d in s.depends_on)]
        if not ready:
            raise ConfigError(
                "suite dependencies form a cycle",
                details={"suites": [s.suite_name for s in pending]},
            )
        nxt = ready[0]
        placed.append(nxt)
        done.add(nxt.suite_name)
        pending.remove(nxt)
    return placed

