"""Tabulated loops loaded from CSV."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Self

import numpy as np
from numpy.typing import NDArray

from bell_switch.errors import InvalidLoopError
from bell_switch.model.parameters import PARAMETER_NAMES
from bell_switch.trajectory.loops import Direction, Loop, LoopKind

#: Tolerance for deciding whether the first and last rows coincide.
CLOSURE_TOLERANCE = 1e-12


@dataclass(frozen=True, kw_only=True, eq=False)
class CustomLoop(Loop):
    """Piecewise-linear loop through tabulated samples.

    Outside the tabulated interval the table repeats with period
    ``times[-1] − times[0]``.

    Attributes:
        times: Strictly increasing sample times.
        columns: Parameter values per sample, by parameter name.
        fixed: Values for parameters absent from the table.
        alpha: Ratio κ/γ applied when κ is neither tabulated nor fixed.
        traversal: Direction label of the tabulated order.
        source: Where the table came from.
    """

    kind: LoopKind = field(default=LoopKind.CUSTOM, init=False)
    times: NDArray[np.float64]
    columns: Mapping[str, NDArray[np.float64]]
    fixed: Mapping[str, float] = field(default_factory=dict)
    alpha: float | None = None
    omega_a: float = 1.0
    traversal: Direction = Direction.CCW
    source: str = "<memory>"

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        if times.ndim != 1 or times.size < 2:
            raise InvalidLoopError("A custom loop needs at least two samples", kind="custom", reason="size")
        if not np.all(np.diff(times) > 0):
            raise InvalidLoopError("Custom loop times must increase strictly", kind="custom", reason="times")
        unknown = (set(self.columns) | set(self.fixed)) - set(PARAMETER_NAMES)
        if unknown:
            raise InvalidLoopError(
                f"Unknown parameter column(s): {', '.join(sorted(unknown))}",
                kind="custom",
                reason="columns",
            )
        for name, values in self.columns.items():
            if np.shape(values) != times.shape or not np.all(np.isfinite(values)):
                raise InvalidLoopError(
                    f"Column {name} must hold one finite value per sample",
                    kind="custom",
                    reason=name,
                )
        if self.alpha is not None and ("kappa" in self.columns or "kappa" in self.fixed):
            raise InvalidLoopError("kappa is tabulated or fixed while alpha is set", kind="custom", reason="kappa")

    @property
    def period(self) -> float:
        return float(self.times[-1] - self.times[0])

    @property
    def direction(self) -> Direction:
        return self.traversal

    @property
    def is_closed(self) -> bool:
        """True when the first and last samples coincide."""
        return all(abs(v[0] - v[-1]) <= CLOSURE_TOLERANCE for v in self.columns.values())

    def _components(self, t: NDArray[np.float64]) -> dict[str, NDArray[np.float64]]:
        t0 = self.times[0]
        rem = np.mod(t - t0, self.period)
        # t0 + k·T maps to the last row for k ≥ 1 so open tables end where they end.
        rem = np.where((rem == 0) & (t > t0), self.period, rem)
        tau = t0 + rem
        out: dict[str, NDArray[np.float64]] = {name: np.full_like(tau, value) for name, value in self.fixed.items()}
        for name, values in self.columns.items():
            out[name] = np.interp(tau, self.times, values)
        return out

    def reversed(self) -> Self:
        t0, t1 = self.times[0], self.times[-1]
        return replace(
            self,
            times=t0 + (t1 - self.times[::-1]),
            columns={name: values[::-1].copy() for name, values in self.columns.items()},
            traversal=self.traversal.opposite,
        )

    @property
    def constants(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "samples": int(self.times.size),
            "alpha": self.alpha,
            "omega_a": self.omega_a,
            "direction": str(self.traversal),
        }


def load_custom_loop(
    path: str | Path,
    *,
    fixed: Mapping[str, float] | None = None,
    alpha: float | None = None,
    omega_a: float = 1.0,
    direction: Direction = Direction.CCW,
) -> CustomLoop:
    """Load a loop from a CSV file with a header row and a time column ``t``.

    Raises:
        InvalidLoopError: If the file cannot be parsed or lacks a ``t`` column.
    """
    path = Path(path)
    try:
        table = np.genfromtxt(path, delimiter=",", names=True, dtype=float, encoding="utf-8")
    except (OSError, ValueError) as e:
        raise InvalidLoopError(f"Cannot read custom loop {path}", cause=e, kind="custom", reason="file") from e

    names = table.dtype.names or ()
    if "t" not in names:
        raise InvalidLoopError(f"Custom loop {path} has no 't' column", kind="custom", reason="t")
    table = np.atleast_1d(table)
    columns = {name: np.asarray(table[name], dtype=float) for name in names if name != "t"}
    fixed_values = {k: v for k, v in (fixed or {}).items() if k not in columns}
    if "omega_a" in columns:
        raise InvalidLoopError("omega_a cannot vary along a custom loop", kind="custom", reason="omega_a")
    return CustomLoop(
        times=np.asarray(table["t"], dtype=float),
        columns=columns,
        fixed=fixed_values,
        alpha=alpha if "kappa" not in columns and "kappa" not in fixed_values else None,
        omega_a=omega_a,
        traversal=direction,
        source=path.name,
    )
