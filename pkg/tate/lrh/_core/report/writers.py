"""
tate.lrh._core.report.writers
=============================
Serialize a RunResult as JSON, CSV or plain text.

Output is byte-stable for a fixed configuration: keys are sorted, reports
are ordered by (m, k) and timing is left out unless include_timing is set.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from tate.core.data_types import OutputFormat, RunResult, VerifyReport
from tate.core.exceptions import ConfigError, ReportError

REPORT_COLUMNS = [
    "m", "k", "degree", "vacuous", "vanishing_law", "route_agreement",
    "functional_eq", "symmetry", "sturm_real_roots", "distinct",
    "lrh_certified", "passed", "coeffs", "failures",
]


# ── Renderers ─────────────────────────────────────────────────────────────────

def render_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n"


def render_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _report_row(report: VerifyReport) -> Dict[str, Any]:
    row = report.to_dict()
    row["coeffs"] = " ".join(report.coeffs)
    row["failures"] = "; ".join(report.failures)
    return row


def render_run_text(result: RunResult, include_timing: bool = False) -> str:
    """Human-readable run summary: one block per suite, failures listed."""
    lines: List[str] = []
    summary = result.summary()
    verdict = "PASS" if result.passed else "FAIL"
    lines.append(f"tatezeta run: {verdict}")
    lines.append(
        f"  pairs={summary['pairs']} nonvacuous={summary['nonvacuous']} "
        f"certified={summary['certified']} checks={summary['checks']} "
        f"failures={summary['failures']}"
    )
    for suite in result.suites:
        mark = "SKIPPED" if suite.skipped else ("ok" if suite.passed else "FAILED")
        head = f"[{suite.name}] {mark}  checks={suite.checks}"
        if include_timing:
            head += f"  {suite.timing_ms:.1f} ms"
        lines.append(head)
        for key in sorted(suite.details):
            lines.append(f"    {key}: {suite.details[key]}")
        for failure in suite.failures:
            lines.append(f"    ✗ {failure['check']} {failure['subject']}: {failure['error']}")
        for report in suite.reports:
            if not report.passed:
                lines.append(f"    ✗ (m={report.m}, k={report.k}) {'; '.join(report.failures) or 'not certified'}")
    return "\n".join(lines) + "\n"


def render_run(result: RunResult, fmt: str, include_timing: bool = False) -> str:
    """
    Render result in fmt.

    JSON carries the full result; CSV has one row per (m, k) report; text
    is the console summary.
    """
    if fmt == OutputFormat.JSON:
        return render_json(result.to_dict(include_timing))
    if fmt == OutputFormat.CSV:
        columns = REPORT_COLUMNS + (["timing_ms"] if include_timing else [])
        rows = []
        for report in result.reports():
            row = _report_row(report)
            if include_timing:
                row["timing_ms"] = report.timing_ms
            rows.append(row)
        return render_csv(rows, columns)
    if fmt == OutputFormat.TEXT:
        return render_run_text(result, include_timing)
    raise ConfigError(f"Unknown output format: {fmt!r}", details={"allowed": list(OutputFormat.ALL)})


# ── File output ───────────────────────────────────────────────────────────────

def write_text(path: Union[str, Path], text: str) -> Path:
    """Write text to path, creating parent directories. IO failures raise ReportError."""
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise ReportError(f"Cannot write {target}: {exc}", details={"path": str(target)}) from exc
    return target


def write_run(
    result: RunResult,
    path: Optional[Union[str, Path]],
    fmt: str,
    include_timing: bool = False,
) -> str:
    """Render result and write it to path when given. Returns the rendered text."""
    text = render_run(result, fmt, include_timing)
    if path is not None:
        write_text(path, text)
    return text
