"""
tate.core.logger
================
Structured run logger shared by the verifier and its suites.

Entries are plain dicts (timestamp, logger, level, operation, fields).
A suite logs through a child from bind(suite=...), so every entry it
writes carries the suite name while all entries land in one run buffer.
"""

from __future__ import annotations

import json
import sys
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

_HEADER_KEYS = ("timestamp", "logger", "level", "operation")


class StructuredLogger:
    """
    In-memory structured logger with optional echo to stderr.

    Usage
    -----
    run_log = StructuredLogger(name="tate.lrh", console=True)
    lrh_log = run_log.bind(suite="lrh")
    lrh_log.log("lrh_verify", m=4, k=0, certified=True)
    run_log.get_entries(suite="lrh", level="ERROR")
    """

    def __init__(
        self,
        name: str = "tate",
        console: bool = False,
        max_entries: int = 10_000,
    ):
        self.name        = name
        self.console     = console
        self.max_entries = max_entries
        self._context: Dict[str, Any] = {}
        self._entries: List[Dict[str, Any]] = []

    def bind(self, **context: Any) -> "StructuredLogger":
        """Child logger writing to the same buffer with context added to each entry."""
        child = StructuredLogger(self.name, self.console, self.max_entries)
        child._context = {**self._context, **context}
        child._entries = self._entries
        return child

    def log(self, operation: str, level: str = "INFO", **fields: Any) -> Dict[str, Any]:
        """
        Record one entry and return it.

        Parameters
        ----------
        operation : str
            Check or run event, e.g. "lrh_verify", "ortho_pair", "suite_done".
        level : str
            DEBUG for passing checks, INFO for summaries, ERROR for failures.
        """
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "logger":    self.name,
            "level":     level,
            "operation": operation,
            **self._context,
            **fields,
        }
        if len(self._entries) >= self.max_entries:
            del self._entries[: len(self._entries) - self.max_entries // 2]
        self._entries.append(entry)
        if self.console:
            self._print_entry(entry)
        return entry

    def debug(self, operation: str, **fields: Any) -> Dict[str, Any]:
        return self.log(operation, level="DEBUG", **fields)

    def error(self, operation: str, **fields: Any) -> Dict[str, Any]:
        return self.log(operation, level="ERROR", **fields)

    def get_entries(
        self,
        operation: Optional[str] = None,
        level: Optional[str] = None,
        **fields: Any,
    ) -> List[Dict[str, Any]]:
        """Entries matching operation, level and every given field value."""
        return [
            e for e in self._entries
            if (operation is None or e.get("operation") == operation)
            and (level is None or e.get("level") == level)
            and all(e.get(key) == value for key, value in fields.items())
        ]

    def _print_entry(self, entry: Dict[str, Any]) -> None:
        ts  = entry["timestamp"][:19]
        lvl = entry["level"].ljust(5)
        extras = {k: v for k, v in entry.items() if k not in _HEADER_KEYS}
        extra_str = " " + json.dumps(extras, default=str) if extras else ""
        print(f"[{ts}] {lvl} {entry['operation']}{extra_str}", file=sys.stderr, flush=True)

    def __repr__(self) -> str:
        return (
            f"StructuredLogger(name={self.name!r}, "
            f"context={self._context!r}, "
            f"entries={len(self._entries)})"
        )
