"""Rich Console renderer for verdicts, minimum gaps and sweeps."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from bell_switch.display.renderer import ReportRenderer

if TYPE_CHECKING:
    from bell_switch.analysis.report import SweepRow
    from bell_switch.analysis.verdict import TransferVerdict
    from bell_switch.spectrum.extrema import MinGapReport

_CLASS_STYLES = {
    "symmetric_swap": "bold cyan",
    "symmetric_identity": "bold green",
    "chiral": "bold magenta",
    "indeterminate": "bold yellow",
}


class RichReportRenderer(ReportRenderer):
    """Renders reports as Rich tables and panels.

    Each render method accepts an optional ``console``. When omitted, a new
    ``Console(record=True)`` is created; the printed text is returned either
    way.
    """

    def render_verdict(
        self, verdict: TransferVerdict, *, title: str = "", console: Console | None = None
    ) -> str:
        """Render a verdict as a fidelity table inside a panel."""
        console = self._ensure_console(console)
        table = Table(show_header=True, header_style="bold")
        table.add_column("Direction")
        table.add_column("Map")
        table.add_column("F(plus)", justify="right")
        table.add_column("F(minus)", justify="right")
        maps = {"cw": verdict.cw_map, "ccw": verdict.ccw_map}
        for direction, per_label in verdict.endpoint_fidelities.items():
            table.add_row(
                direction.upper(),
                str(maps[direction]),
                f"{per_label['plus']:.6f}",
                f"{per_label['minus']:.6f}",
            )
        cls = str(verdict.transfer_class)
        summary = Text.assemble(
            ("Class: ", "bold"),
            (cls, _CLASS_STYLES.get(cls, "bold")),
            f"  (start {verdict.initial_label}, threshold {verdict.threshold:g})",
        )
        if not verdict.fidelities_bounded:
            summary.append("  fidelities exceed 1", style="yellow")
        console.print(Panel(table, title=title or "Transfer verdict", expand=False))
        console.print(summary)
        return console.export_text()

    def render_min_gap(self, reports: Sequence[MinGapReport], *, console: Console | None = None) -> str:
        """Render one row per grid with the refined minimum and the reference point."""
        console = self._ensure_console(console)
        if not reports:
            console.print(Panel("No grids sampled", title="Minimum gap", expand=False))
            return console.export_text()
        table = Table(title="Minimum gap", show_header=True, header_style="bold")
        for column in ("Grid", "Point", "|gap|", "|gap^2|", "EP", "Reference |gap|"):
            table.add_column(column)
        for r in reports:
            ref = f"{r.reference_gap:.3e}" if r.reference_gap is not None else "-"
            table.add_row(
                r.grid_name,
                f"{r.axes[0]}={r.point[0]:.6g}, {r.axes[1]}={r.point[1]:.6g}",
                f"{r.gap:.3e}",
                f"{r.discriminant:.3e}",
                Text("yes", style="green") if r.is_ep else Text("no", style="red"),
                ref,
            )
        console.print(table)
        return console.export_text()

    def render_sweep(
        self, parameter: str, rows: Sequence[SweepRow], *, console: Console | None = None
    ) -> str:
        """Render the sweep as a table ordered like *rows*."""
        console = self._ensure_console(console)
        table = Table(title=f"Sweep over {parameter}", show_header=True, header_style="bold")
        for column in (parameter, "Start", "Class", "CW same", "CW other", "CCW same", "CCW other"):
            table.add_column(column, justify="right")
        for row in rows:
            cls = str(row.transfer_class)
            table.add_row(
                f"{row.value:.6g}",
                row.initial_label,
                Text(cls, style=_CLASS_STYLES.get(cls, "")),
                f"{row.cw_same:.6f}",
                f"{row.cw_opposite:.6f}",
                f"{row.ccw_same:.6f}",
                f"{row.ccw_opposite:.6f}",
            )
        console.print(table)
        return console.export_text()

    @staticmethod
    def _ensure_console(console: Console | None) -> Console:
        return console if console is not None else Console(record=True)
