"""Geometric diagnostics of loops relative to a reference point."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from bell_switch.errors import ReferenceOnPathError
from bell_switch.model.parameters import PARAMETER_NAMES, ParameterPoint
from bell_switch.trajectory.loops import Loop

#: Default number of samples for winding-number accumulation.
WINDING_SAMPLES = 4096

#: Below this distance the reference counts as lying on the path.
ON_PATH_TOLERANCE = 1e-10


@dataclass(frozen=True)
class EncirclementReport:
    """Winding of a projected loop around a reference point.

    Attributes:
        winding_number: Signed revolutions, positive counter-clockwise in (x, y).
        min_distance: Smallest distance from the sampled path to the reference.
        turns: Accumulated angle divided by 2π before rounding.
        plane: The two parameter names forming (x, y).
    """

    winding_number: int
    min_distance: float
    turns: float
    plane: tuple[str, str]


def _reference_xy(reference: ParameterPoint | tuple[float, float], plane: tuple[str, str]) -> tuple[float, float]:
    if isinstance(reference, ParameterPoint):
        return getattr(reference, plane[0]), getattr(reference, plane[1])
    x, y = reference
    return float(x), float(y)


def encirclement_diagnostic(
    loop: Loop,
    reference: ParameterPoint | tuple[float, float],
    plane: tuple[str, str],
    *,
    samples: int = WINDING_SAMPLES,
) -> EncirclementReport:
    """Count how often the loop, projected onto *plane*, winds around *reference*.

    The loop is sampled uniformly over one closure period and treated as a
    closed polygon.

    Raises:
        ValueError: If the plane names are invalid.
        ReferenceOnPathError: If the reference lies on the sampled path.
    """
    if len(plane) != 2 or any(name not in PARAMETER_NAMES for name in plane):
        raise ValueError(f"Plane must name two model parameters, got {plane}")
    rx, ry = _reference_xy(reference, plane)
    times = np.linspace(0.0, loop.closure_period, samples, endpoint=False)
    values = loop.sample(times)
    x = values[plane[0]] - rx
    y = values[plane[1]] - ry

    # closed polygon: segment k runs from vertex k to vertex k+1 (mod n)
    x_next, y_next = np.roll(x, -1), np.roll(y, -1)
    dx, dy = x_next - x, y_next - y
    length2 = dx * dx + dy * dy
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.clip(np.where(length2 > 0, -(x * dx + y * dy) / length2, 0.0), 0.0, 1.0)
    min_distance = float(np.min(np.hypot(x + s * dx, y + s * dy)))
    if min_distance < ON_PATH_TOLERANCE:
        raise ReferenceOnPathError(
            f"Reference lies on the loop (distance {min_distance:.3e})", min_distance=min_distance
        )

    angles = np.arctan2(y, x)
    steps = np.angle(np.exp(1j * (np.roll(angles, -1) - angles)))
    turns = float(np.sum(steps) / (2.0 * math.pi))
    return EncirclementReport(
        winding_number=round(turns),
        min_distance=min_distance,
        turns=turns,
        plane=(plane[0], plane[1]),
    )
