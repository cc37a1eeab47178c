"""Terminal rendering of verdicts, minimum-gap reports and sweeps."""

from bell_switch.display.functions import print_min_gap, print_sweep, print_verdict
from bell_switch.display.plain_renderer import PlainReportRenderer
from bell_switch.display.renderer import ReportRenderer
from bell_switch.display.rich_renderer import RichReportRenderer

__all__ = [
    "PlainReportRenderer",
    "ReportRenderer",
    "RichReportRenderer",
    "print_min_gap",
    "print_sweep",
    "print_verdict",
]
