"""Transfer classification from a clockwise and a counter-clockwise run."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from bell_switch.dynamics.evolve import EvolutionRecord
from bell_switch.errors import MismatchedRecordsError
from bell_switch.model.eigensystem import Label
from bell_switch.trajectory.loops import Direction

logger = logging.getLogger(__name__)

#: Numerical slack allowed above 1 for biorthogonal fidelities.
FIDELITY_SLACK = 1e-6

#: Two initial states closer than this (up to a global phase) count as equal.
_STATE_TOLERANCE = 1e-9


class TransferMap(StrEnum):
    """What one traversal does to the initial branch."""

    IDENTITY = "identity"
    SWAP = "swap"
    INDETERMINATE = "indeterminate"


class TransferClass(StrEnum):
    """Combined verdict over both directions."""

    SYMMETRIC_SWAP = "symmetric_swap"
    SYMMETRIC_IDENTITY = "symmetric_identity"
    CHIRAL = "chiral"
    INDETERMINATE = "indeterminate"


def _opposite(label: Label) -> Label:
    return "minus" if label == "plus" else "plus"


@dataclass(frozen=True)
class TransferVerdict:
    """Outcome of a transfer classification.

    Attributes:
        cw_map: Map of the clockwise traversal.
        ccw_map: Map of the counter-clockwise traversal.
        transfer_class: Combined class.
        endpoint_fidelities: Final fidelities per direction and label.
        threshold: Threshold the maps were decided with.
        initial_label: Branch both runs started on.
        fidelities_bounded: Whether all four fidelities lie in [0, 1 + slack].
    """

    cw_map: TransferMap
    ccw_map: TransferMap
    transfer_class: TransferClass
    endpoint_fidelities: dict[str, dict[str, float]] = field(default_factory=dict)
    threshold: float = 0.99
    initial_label: Label = "plus"
    fidelities_bounded: bool = True

    def as_dict(self) -> dict[str, object]:
        """JSON-ready view of the verdict."""
        return {
            "class": str(self.transfer_class),
            "cw_map": str(self.cw_map),
            "ccw_map": str(self.ccw_map),
            "threshold": self.threshold,
            "initial_label": self.initial_label,
            "endpoint_fidelities": self.endpoint_fidelities,
            "fidelities_bounded": self.fidelities_bounded,
        }


def _check_threshold(threshold: float) -> None:
    if not 0.5 < threshold <= 1.0:
        raise ValueError(f"threshold must lie in (0.5, 1], got {threshold}")


def transfer_map(record: EvolutionRecord, threshold: float) -> TransferMap:
    """Decide the map of one traversal from its endpoint fidelities."""
    _check_threshold(threshold)
    same = record.final_fidelity(record.initial_label)
    other = record.final_fidelity(_opposite(record.initial_label))
    if other >= threshold:
        return TransferMap.SWAP
    if same >= threshold:
        return TransferMap.IDENTITY
    return TransferMap.INDETERMINATE


def combine_maps(cw_map: TransferMap, ccw_map: TransferMap) -> TransferClass:
    """Class of a pair of maps."""
    if TransferMap.INDETERMINATE in (cw_map, ccw_map):
        return TransferClass.INDETERMINATE
    if cw_map != ccw_map:
        return TransferClass.CHIRAL
    if cw_map is TransferMap.SWAP:
        return TransferClass.SYMMETRIC_SWAP
    return TransferClass.SYMMETRIC_IDENTITY


def check_pair(rec_cw: EvolutionRecord, rec_ccw: EvolutionRecord) -> None:
    """Verify that two records are opposite traversals from the same state.

    Raises:
        MismatchedRecordsError: On wrong directions, different loops or
            different initial states.
    """
    if rec_cw.direction is not Direction.CW or rec_ccw.direction is not Direction.CCW:
        raise MismatchedRecordsError(
            f"Expected a cw and a ccw record, got {rec_cw.direction} and {rec_ccw.direction}",
            reason="direction",
        )
    if rec_cw.loop.shape_key() != rec_ccw.loop.shape_key():
        raise MismatchedRecordsError(
            f"Records traverse different loops: {rec_cw.loop_id} vs {rec_ccw.loop_id}",
            reason="loop",
        )
    overlap = abs(complex(np.vdot(rec_cw.states[0], rec_ccw.states[0])))
    if rec_cw.initial_label != rec_ccw.initial_label or overlap < 1.0 - _STATE_TOLERANCE:
        raise MismatchedRecordsError(
            "Records start from different initial states",
            reason="initial_state",
            overlap=overlap,
        )


def classify_transfer(
    rec_cw: EvolutionRecord,
    rec_ccw: EvolutionRecord,
    threshold: float = 0.99,
    *,
    slack: float = FIDELITY_SLACK,
) -> TransferVerdict:
    """Classify a loop as a symmetric swap, a chiral switch or an identity.

    A traversal is a swap when the endpoint fidelity on the opposite label
    reaches *threshold*, an identity when the one on the starting label does,
    and indeterminate otherwise.

    Raises:
        ValueError: If *threshold* is outside (0.5, 1].
        MismatchedRecordsError: If the records are not comparable.
    """
    _check_threshold(threshold)
    check_pair(rec_cw, rec_ccw)
    cw_map = transfer_map(rec_cw, threshold)
    ccw_map = transfer_map(rec_ccw, threshold)
    fidelities = {
        str(rec.direction): {"plus": rec.final_fidelity_plus, "minus": rec.final_fidelity_minus}
        for rec in (rec_cw, rec_ccw)
    }
    values = [v for per in fidelities.values() for v in per.values()]
    bounded = all(0.0 <= v <= 1.0 + slack for v in values)
    if not bounded:
        logger.warning(
            "Endpoint fidelities leave [0, 1 + %.0e]: max %.9g", slack, max(values)
        )
    return TransferVerdict(
        cw_map=cw_map,
        ccw_map=ccw_map,
        transfer_class=combine_maps(cw_map, ccw_map),
        endpoint_fidelities=fidelities,
        threshold=threshold,
        initial_label=rec_cw.initial_label,
        fidelities_bounded=bounded,
    )


@dataclass(frozen=True)
class VerdictStability:
    """Class of one record pair over a range of thresholds.

    Attributes:
        classes: Class per threshold.
        stable: True when every threshold gives the same class.
    """

    classes: dict[float, TransferClass]
    stable: bool

    def as_dict(self) -> dict[str, object]:
        return {
            "thresholds": list(self.classes),
            "classes": [str(c) for c in self.classes.values()],
            "stable": self.stable,
        }


def verdict_stability(
    rec_cw: EvolutionRecord,
    rec_ccw: EvolutionRecord,
    thresholds: Iterable[float] = (0.9, 0.95, 0.99),
) -> VerdictStability:
    """Recompute the class at each threshold."""
    check_pair(rec_cw, rec_ccw)
    classes: dict[float, TransferClass] = {}
    for threshold in sorted(thresholds):
        classes[threshold] = combine_maps(
            transfer_map(rec_cw, threshold), transfer_map(rec_ccw, threshold)
        )
    return VerdictStability(classes=classes, stable=len(set(classes.values())) <= 1)
