"""
tate.lrh._core.report.tables
============================
Canonical polynomial tables (golden files).

Each row carries the primitive integer coefficients of p_m^(k) in ascending
order, its zeros 1/2 + it with t printed to a fixed 30 decimal places, and
the normalization tag.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from tate.core.data_types import NORMALIZATION, OutputFormat, ZetaPolyRecord
from tate.core.exceptions import ConfigError, DomainError
from tate.lrh._core.analytic.context import NumericContext
from tate.lrh._core.analytic.roots import root_find
from tate.lrh._core.exact.scalars import format_rational
from tate.lrh._core.exact.unipoly import critical_line_restriction
from tate.lrh._core.report.writers import render_csv, render_json, write_text

DECIMAL_PLACES = 30
CRITICAL_RE = "0.5"
TABLE_COLUMNS = ["m", "k", "degree", "coeffs", "roots", "normalization"]


def fixed_decimal(nctx: NumericContext, x, places: int = DECIMAL_PLACES) -> str:
    """x rounded to places decimals, never "-0.000…"."""
    mp = nctx.mp
    scaled = int(mp.nint(mp.re(x) * mp.mpf(10) ** places))
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def critical_ordinates(nctx: NumericContext, rec: ZetaPolyRecord) -> List[str]:
    """Ordinates t of the zeros 1/2 + it of rec, ascending."""
    if rec.is_zero or rec.degree < 1:
        return []
    rho = critical_line_restriction(rec.coeffs, rec.degree)
    ts = sorted((nctx.mp.re(z) for z, _ in root_find(nctx, rho)), key=float)
    return [fixed_decimal(nctx, t) for t in ts]


def table_row(nctx: NumericContext, rec: ZetaPolyRecord) -> Dict[str, Any]:
    return {
        "m":             rec.m,
        "k":             rec.k,
        "degree":        rec.degree,
        "coeffs":        [format_rational(c) for c in rec.coeffs.coeffs],
        "roots":         [{"re": CRITICAL_RE, "im": t} for t in critical_ordinates(nctx, rec)],
        "normalization": NORMALIZATION,
    }


def render_table(rows: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(rows)
    if fmt == OutputFormat.CSV:
        flat = [
            {
                **row,
                "coeffs": " ".join(row["coeffs"]),
                "roots":  " ".join(f"{r['re']}+{r['im']}i" for r in row["roots"]),
            }
            for row in rows
        ]
        return render_csv(flat, TABLE_COLUMNS)
    if fmt == OutputFormat.TEXT:
        lines = []
        for row in rows:
            ts = ", ".join(r["im"] for r in row["roots"]) or "-"
            lines.append(
                f"p_{row['m']}^({row['k']})  d={row['degree']}  "
                f"coeffs=[{', '.join(row['coeffs'])}]  t=[{ts}]"
            )
        return "\n".join(lines) + "\n"
    raise ConfigError(f"Unknown output format: {fmt!r}", details={"allowed": list(OutputFormat.ALL)})


def export_table(
    records: Sequence[ZetaPolyRecord],
    path: Union[str, Path],
    fmt: str = OutputFormat.JSON,
    nctx: NumericContext = None,
) -> Path:
    """
    Write the canonical table for records, sorted by (m, k).

    Raises
    ------
    DomainError
        If records is empty.
    ReportError
        If the file cannot be written.
    """
    if not records:
        raise DomainError("export_table needs at least one record")
    nctx = nctx or NumericContext()
    rows = [table_row(nctx, rec) for rec in sorted(records, key=lambda r: (r.m, r.k))]
    return write_text(path, render_table(rows, fmt))
