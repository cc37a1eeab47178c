"""JSON experiment reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any

from bell_switch.analysis.adiabaticity import AdiabaticityMetrics
from bell_switch.analysis.verdict import TransferClass, TransferVerdict, VerdictStability
from bell_switch.dynamics.evolve import EvolutionRecord
from bell_switch.trajectory.diagnostics import EncirclementReport
from bell_switch.trajectory.loops import SymmetricLoop

REPORT_VERSION = 1


def _encirclement(report: EncirclementReport) -> dict[str, Any]:
    return {
        "plane": list(report.plane),
        "winding_number": report.winding_number,
        "turns": report.turns,
        "min_distance": report.min_distance,
    }


def _unsigned_constants(constants: dict[str, Any]) -> dict[str, Any]:
    # the sign of omega only encodes the direction, which "directions" carries
    if "omega" in constants:
        return {**constants, "omega": abs(constants["omega"])}
    return dict(constants)


def build_report(
    rec_cw: EvolutionRecord,
    rec_ccw: EvolutionRecord,
    verdict: TransferVerdict,
    *,
    stability: VerdictStability | None = None,
    metrics: AdiabaticityMetrics | None = None,
    encirclement: EncirclementReport | None = None,
    name: str = "",
    expected: str | None = None,
) -> dict[str, Any]:
    """Collect one classification run into a JSON-ready mapping.

    Args:
        rec_cw: Clockwise record.
        rec_ccw: Counter-clockwise record.
        verdict: Classification of the two records.
        stability: Class over a range of thresholds.
        metrics: Adiabaticity metrics of the loop.
        encirclement: Winding around the experiment's reference point.
        name: Experiment name.
        expected: Expected class, when the experiment declares one.
    """
    loop = rec_ccw.loop
    report: dict[str, Any] = {
        "version": REPORT_VERSION,
        "experiment": name,
        "loop": {
            "kind": str(loop.kind),
            "constants": _unsigned_constants(loop.constants),
            "period": loop.period,
            "closure_period": loop.closure_period,
            "premise_violated": loop.premise_violated if isinstance(loop, SymmetricLoop) else None,
        },
        "directions": {str(rec.direction): rec.loop_id for rec in (rec_cw, rec_ccw)},
        "integration": {
            "policy": rec_cw.policy,
            "labeling": rec_cw.labeling,
            "samples": len(rec_cw.times) - 1,
            "ambiguous_steps": {str(rec.direction): rec.ambiguous_steps for rec in (rec_cw, rec_ccw)},
        },
        "verdict": verdict.as_dict(),
        "final_log_norm": {str(rec.direction): float(rec.log_norm[-1]) for rec in (rec_cw, rec_ccw)},
        "stability": stability.as_dict() if stability is not None else None,
        "adiabaticity": metrics.as_dict() if metrics is not None else None,
        "encirclement": _encirclement(encirclement) if encirclement is not None else None,
    }
    if expected is not None:
        report["expected"] = expected
        report["matches_expected"] = expected == str(verdict.transfer_class)
    return report


@dataclass(frozen=True)
class SweepRow:
    """Outcome of one sweep value for one initial label.

    Attributes:
        value: Value of the swept parameter.
        initial_label: Branch both runs started on.
        transfer_class: Class at the configured threshold.
        cw_same: Clockwise endpoint fidelity on the starting label.
        cw_opposite: Clockwise endpoint fidelity on the other label.
        ccw_same: Counter-clockwise endpoint fidelity on the starting label.
        ccw_opposite: Counter-clockwise endpoint fidelity on the other label.
    """

    value: float
    initial_label: str
    transfer_class: TransferClass
    cw_same: float
    cw_opposite: float
    ccw_same: float
    ccw_opposite: float

    @classmethod
    def from_verdict(cls, value: float, verdict: TransferVerdict) -> SweepRow:
        label = verdict.initial_label
        other = "minus" if label == "plus" else "plus"
        cw = verdict.endpoint_fidelities["cw"]
        ccw = verdict.endpoint_fidelities["ccw"]
        return cls(value, label, verdict.transfer_class, cw[label], cw[other], ccw[label], ccw[other])

    def as_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["transfer_class"] = str(self.transfer_class)
        return data
