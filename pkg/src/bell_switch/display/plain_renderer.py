"""Plain text renderer for verdicts, minimum gaps and sweeps.

Produces aligned ASCII columns suitable for log files and CI output.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from typing import TYPE_CHECKING, Any

from bell_switch.display.renderer import ReportRenderer

if TYPE_CHECKING:
    from bell_switch.analysis.report import SweepRow
    from bell_switch.analysis.verdict import TransferVerdict
    from bell_switch.spectrum.extrema import MinGapReport


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths, strict=True))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.rjust(w) for c, w in zip(r, widths, strict=True)) for r in rows)
    return lines


class PlainReportRenderer(ReportRenderer):
    """Renders reports as plain text.

    Each method prints to ``file`` (stdout by default) and returns the text.
    """

    def render_verdict(self, verdict: TransferVerdict, *, title: str = "", file: Any | None = None) -> str:
        maps = {"cw": verdict.cw_map, "ccw": verdict.ccw_map}
        rows = [
            [d.upper(), str(maps[d]), f"{f['plus']:.6f}", f"{f['minus']:.6f}"]
            for d, f in verdict.endpoint_fidelities.items()
        ]
        lines = [title or "Transfer verdict"]
        lines += _table(["Direction", "Map", "F(plus)", "F(minus)"], rows)
        lines.append(
            f"Class: {verdict.transfer_class} (start {verdict.initial_label}, threshold {verdict.threshold:g})"
        )
        if not verdict.fidelities_bounded:
            lines.append("Warning: fidelities exceed 1")
        return self._emit(lines, file)

    def render_min_gap(self, reports: Sequence[MinGapReport], *, file: Any | None = None) -> str:
        if not reports:
            return self._emit(["No grids sampled"], file)
        rows = [
            [
                r.grid_name,
                f"{r.point[0]:.6g}",
                f"{r.point[1]:.6g}",
                f"{r.gap:.3e}",
                "yes" if r.is_ep else "no",
                f"{r.reference_gap:.3e}" if r.reference_gap is not None else "-",
            ]
            for r in reports
        ]
        return self._emit(_table(["Grid", "x", "y", "|gap|", "EP", "ref |gap|"], rows), file)

    def render_sweep(self, parameter: str, rows: Sequence[SweepRow], *, file: Any | None = None) -> str:
        body = [
            [
                f"{r.value:.6g}",
                r.initial_label,
                str(r.transfer_class),
                f"{r.cw_same:.6f}",
                f"{r.cw_opposite:.6f}",
                f"{r.ccw_same:.6f}",
                f"{r.ccw_opposite:.6f}",
            ]
            for r in rows
        ]
        headers = [parameter, "start", "class", "cw same", "cw other", "ccw same", "ccw other"]
        return self._emit(_table(headers, body), file)

    @staticmethod
    def _emit(lines: list[str], file: Any | None) -> str:
        text = "\n".join(lines)
        print(text, file=file if file is not None else sys.stdout)
        return text
