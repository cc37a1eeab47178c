"""Standalone helpers that pick a renderer by format name.

Functions:
    print_verdict: Render a transfer verdict.
    print_min_gap: Render minimum-gap reports.
    print_sweep: Render a sweep table.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from bell_switch.display.plain_renderer import PlainReportRenderer
from bell_switch.display.rich_renderer import RichReportRenderer

if TYPE_CHECKING:
    from rich.console import Console

    from bell_switch.analysis.report import SweepRow
    from bell_switch.analysis.verdict import TransferVerdict
    from bell_switch.spectrum.extrema import MinGapReport

#: Supported format names mapped to their renderer classes.
_FORMATS: dict[str, type] = {
    "rich": RichReportRenderer,
    "plain": PlainReportRenderer,
}


def _resolve_renderer(format: str) -> RichReportRenderer | PlainReportRenderer:
    """Create a renderer instance for the given format name.

    Raises:
        ValueError: If *format* is not a recognised format name. The error
            message includes the list of valid format names.
    """
    cls = _FORMATS.get(format)
    if cls is None:
        valid = ", ".join(sorted(_FORMATS))
        raise ValueError(f"Unknown format: {format!r}. Valid formats: {valid}")
    return cls()


def print_verdict(
    verdict: TransferVerdict,
    *,
    title: str = "",
    format: str = "rich",
    console: Console | None = None,
) -> str:
    """Render a transfer verdict in the chosen format.

    Args:
        verdict: Verdict to render.
        title: Heading.
        format: ``"rich"`` or ``"plain"``.
        console: Optional Rich console, used only with ``"rich"``.

    Returns:
        The rendered string.

    Raises:
        ValueError: If *format* is not recognised.
    """
    renderer = _resolve_renderer(format)
    if isinstance(renderer, RichReportRenderer):
        return renderer.render_verdict(verdict, title=title, console=console)
    return renderer.render_verdict(verdict, title=title)


def print_min_gap(
    reports: Sequence[MinGapReport],
    *,
    format: str = "rich",
    console: Console | None = None,
) -> str:
    """Render minimum-gap reports in the chosen format.

    Raises:
        ValueError: If *format* is not recognised.
    """
    renderer = _resolve_renderer(format)
    if isinstance(renderer, RichReportRenderer):
        return renderer.render_min_gap(reports, console=console)
    return renderer.render_min_gap(reports)


def print_sweep(
    parameter: str,
    rows: Sequence[SweepRow],
    *,
    format: str = "rich",
    console: Console | None = None,
) -> str:
    """Render a sweep table in the chosen format.

    Raises:
        ValueError: If *format* is not recognised.
    """
    renderer = _resolve_renderer(format)
    if isinstance(renderer, RichReportRenderer):
        return renderer.render_sweep(parameter, rows, console=console)
    return renderer.render_sweep(parameter, rows)
