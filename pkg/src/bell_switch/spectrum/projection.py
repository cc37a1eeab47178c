"""Loop trajectories projected onto a grid plane."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from bell_switch.errors import PlaneMismatchError
from bell_switch.spectrum.grid import GridSpec, continued_parity, raw_spectrum
from bell_switch.trajectory.loops import Loop

#: Largest allowed difference between a loop's off-plane parameter and the grid value.
PLANE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class LoopProjection:
    """A sampled loop in plane coordinates with continued eigenvalues.

    Attributes:
        times: Sample times over one traversal.
        x: Values of the grid's ``axis_x``.
        y: Values of the grid's ``axis_y``.
        values_plus: E₊ along the loop.
        values_minus: E₋ along the loop.
        loop_id: Provenance string of the loop.
    """

    times: NDArray[np.float64]
    x: NDArray[np.float64]
    y: NDArray[np.float64]
    values_plus: NDArray[np.complex128]
    values_minus: NDArray[np.complex128]
    loop_id: str


def project_loop(
    grid: GridSpec,
    loop: Loop,
    n_samples: int = 1000,
    *,
    tolerance: float = PLANE_TOLERANCE,
) -> LoopProjection:
    """Sample *loop* over one traversal and express it in the plane of *grid*.

    Eigenvalues are labelled at t = 0 by real part, as on the grid seed, and
    continued along the path.

    Raises:
        PlaneMismatchError: If the loop moves a parameter the grid holds fixed.
        ValueError: If ``n_samples`` is not positive.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    times = np.linspace(0.0, loop.period, n_samples + 1)
    values = loop.sample(times)
    expected = grid.parameters(values[grid.axis_x], values[grid.axis_y])
    for name, along in values.items():
        if name in grid.axes:
            continue
        deviation = float(np.max(np.abs(along - expected[name])))
        if deviation > tolerance:
            raise PlaneMismatchError(
                f"Loop {loop.loop_id} leaves the plane of grid {grid.name!r}: "
                f"{name} deviates by {deviation:.3e}",
                parameter=name,
                deviation=deviation,
            )

    raw = raw_spectrum(values)
    exchange = continued_parity(raw)
    return LoopProjection(
        times=times,
        x=values[grid.axis_x],
        y=values[grid.axis_y],
        values_plus=np.where(exchange, raw.minus, raw.plus),
        values_minus=np.where(exchange, raw.plus, raw.minus),
        loop_id=loop.loop_id,
    )
