"""Abstract base class for report renderers.

Defines the ``ReportRenderer`` ABC that the format-specific renderers
(Rich, plain text) implement. Each renderer turns a transfer verdict, a set
of minimum-gap reports or a sweep table into a string.

Classes:
    ReportRenderer: ABC defining render_verdict, render_min_gap, render_sweep.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from bell_switch.analysis.report import SweepRow
    from bell_switch.analysis.verdict import TransferVerdict
    from bell_switch.spectrum.extrema import MinGapReport


class ReportRenderer(ABC):
    """Abstract base class for terminal reports."""

    @abstractmethod
    def render_verdict(self, verdict: TransferVerdict, *, title: str = "") -> str:
        """Render one transfer verdict with its endpoint fidelities.

        Args:
            verdict: The classification to render.
            title: Heading, usually the experiment name.

        Returns:
            Formatted string representation of the verdict.
        """
        ...

    @abstractmethod
    def render_min_gap(self, reports: Sequence[MinGapReport]) -> str:
        """Render minimum-gap reports, one row per grid.

        Args:
            reports: Reports to render.

        Returns:
            Formatted string representation of the reports.
        """
        ...

    @abstractmethod
    def render_sweep(self, parameter: str, rows: Sequence[SweepRow]) -> str:
        """Render a sweep table.

        Args:
            parameter: Name of the swept parameter.
            rows: One row per value and initial label.

        Returns:
            Formatted string representation of the table.
        """
        ...
