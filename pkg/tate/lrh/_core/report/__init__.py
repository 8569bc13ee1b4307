from tate.lrh._core.report.tables import export_table, render_table, table_row
from tate.lrh._core.report.writers import render_run, write_run, write_text

__all__ = ["export_table", "render_table", "render_run", "table_row", "write_run", "write_text"]
