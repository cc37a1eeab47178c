"""Transfer verdicts, adiabaticity diagnostics and experiment reports."""

from bell_switch.analysis.adiabaticity import AdiabaticityMetrics, adiabaticity_metrics, continued_eigensystems
from bell_switch.analysis.config import AnalysisConfig
from bell_switch.analysis.report import SweepRow, build_report
from bell_switch.analysis.verdict import (
    FIDELITY_SLACK,
    TransferClass,
    TransferMap,
    TransferVerdict,
    VerdictStability,
    classify_transfer,
    combine_maps,
    transfer_map,
    verdict_stability,
)

__all__ = [
    "FIDELITY_SLACK",
    "AdiabaticityMetrics",
    "AnalysisConfig",
    "SweepRow",
    "TransferClass",
    "TransferMap",
    "TransferVerdict",
    "VerdictStability",
    "adiabaticity_metrics",
    "build_report",
    "classify_transfer",
    "combine_maps",
    "continued_eigensystems",
    "transfer_map",
    "verdict_stability",
]
