"""Eigenvalue surfaces sampled over a two-parameter plane."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from bell_switch.dynamics.continuation import AMBIGUITY_TOLERANCE, swap_mask
from bell_switch.model.eigensystem import DEGENERACY_FLOOR, biorthonormal_vectors
from bell_switch.model.hamiltonian import eigenvalues_on_grid
from bell_switch.model.parameters import (
    PARAMETER_NAMES,
    ParameterName,
    ParameterPoint,
    complete_parameters,
)

logger = logging.getLogger(__name__)


class GridSpec(BaseModel):
    """A rectangular slice of parameter space.

    Attributes:
        name: Identifier used in file names and reports.
        axis_x: Parameter varied along the first index.
        axis_y: Parameter varied along the second index.
        x_range: Closed interval of ``axis_x``.
        y_range: Closed interval of ``axis_y``.
        nx: Nodes along ``axis_x``.
        ny: Nodes along ``axis_y``.
        fixed: Values of the parameters that are not axes.
        alpha: Ratio κ/γ tying the cavity decay to the atomic decay.
        reference: Optional point of interest, reported by min-gap searches.
        note: Free text carried into output metadata.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field(default="grid", description="Grid identifier")
    axis_x: ParameterName = Field(description="First axis")
    axis_y: ParameterName = Field(description="Second axis")
    x_range: tuple[float, float] = Field(description="Interval of the first axis")
    y_range: tuple[float, float] = Field(description="Interval of the second axis")
    nx: int = Field(default=401, ge=2, description="Nodes along the first axis")
    ny: int = Field(default=401, ge=2, description="Nodes along the second axis")
    fixed: dict[str, float] = Field(default_factory=dict, description="Fixed parameters")
    alpha: float | None = Field(default=None, description="Ratio kappa/gamma")
    reference: tuple[float, float] | None = Field(default=None, description="Point of interest")
    note: str = Field(default="", description="Metadata note")

    @model_validator(mode="after")
    def _check_plane(self) -> GridSpec:
        if self.axis_x == self.axis_y:
            raise ValueError(f"axis_x and axis_y must differ, both are {self.axis_x!r}")
        for axis, (low, high) in ((self.axis_x, self.x_range), (self.axis_y, self.y_range)):
            if not (math.isfinite(low) and math.isfinite(high)) or low >= high:
                raise ValueError(f"Range of {axis} must be a finite interval with low < high")
        unknown = set(self.fixed) - set(PARAMETER_NAMES)
        if unknown:
            raise ValueError(f"Unknown fixed parameter(s): {', '.join(sorted(unknown))}")
        for axis in self.axes:
            if axis in self.fixed:
                raise ValueError(f"{axis} is both an axis and fixed")
        if self.alpha is not None and ("kappa" in self.fixed or "kappa" in self.axes):
            raise ValueError("kappa is derived from gamma when alpha is set")
        return self

    @property
    def axes(self) -> tuple[ParameterName, ParameterName]:
        """The two axis names."""
        return self.axis_x, self.axis_y

    @property
    def omega_a(self) -> float:
        """The energy unit of the slice."""
        return float(self.fixed.get("omega_a", 1.0))

    def x_values(self) -> NDArray[np.float64]:
        """Node coordinates along ``axis_x``."""
        return _axis_nodes(self.x_range, self.nx)

    def y_values(self) -> NDArray[np.float64]:
        """Node coordinates along ``axis_y``."""
        return _axis_nodes(self.y_range, self.ny)

    def parameters(
        self, x: NDArray[np.float64] | float, y: NDArray[np.float64] | float
    ) -> dict[str, NDArray[np.float64]]:
        """Complete parameter arrays at plane coordinates (x, y)."""
        values: dict[str, Any] = dict(self.fixed)
        values[self.axis_x] = x
        values[self.axis_y] = y
        return complete_parameters(values, alpha=self.alpha)

    def mesh(self) -> dict[str, NDArray[np.float64]]:
        """Complete parameter arrays over all nodes, shape ``(nx, ny)``."""
        gx, gy = np.meshgrid(self.x_values(), self.y_values(), indexing="ij")
        return self.parameters(gx, gy)

    def point(self, x: float, y: float) -> ParameterPoint:
        """The parameter point at plane coordinates (x, y)."""
        values = self.parameters(x, y)
        return ParameterPoint(**{name: float(values[name]) for name in PARAMETER_NAMES})

    def header(self) -> dict[str, Any]:
        """Metadata describing the slice, for file headers."""
        return self.model_dump(mode="json")


def _axis_nodes(bounds: tuple[float, float], n: int) -> NDArray[np.float64]:
    low, high = bounds
    return low + (high - low) * (np.arange(n) / (n - 1))


@dataclass(frozen=True, eq=False)
class SurfaceSample:
    """Labelled eigenvalues at every node of a grid.

    Attributes:
        grid: The sampled slice.
        values_plus: E₊ at each node, shape ``(nx, ny)``.
        values_minus: E₋ at each node.
        gap_abs: |E₊ − E₋| = |Δ_E|.
        discriminant_abs: |Δ_E²|, the smooth degeneracy measure.
    """

    grid: GridSpec
    values_plus: NDArray[np.complex128]
    values_minus: NDArray[np.complex128]
    gap_abs: NDArray[np.float64]
    discriminant_abs: NDArray[np.float64]

    @property
    def re_plus(self) -> NDArray[np.float64]:
        return self.values_plus.real

    @property
    def im_plus(self) -> NDArray[np.float64]:
        return self.values_plus.imag

    @property
    def re_minus(self) -> NDArray[np.float64]:
        return self.values_minus.real

    @property
    def im_minus(self) -> NDArray[np.float64]:
        return self.values_minus.imag

    @property
    def shape(self) -> tuple[int, int]:
        return self.grid.nx, self.grid.ny


@dataclass(frozen=True, eq=False)
class RawSpectrum:
    """Closed-form spectrum with eigenvectors, before labels are continued."""

    plus: NDArray[np.complex128]
    minus: NDArray[np.complex128]
    vectors: NDArray[np.complex128]
    gap: NDArray[np.complex128]
    discriminant: NDArray[np.complex128]
    degenerate: NDArray[np.bool_]


def raw_spectrum(values: dict[str, NDArray[np.float64]], floor: float = DEGENERACY_FLOOR) -> RawSpectrum:
    """Evaluate eigenvalues and vᵀv-normalized eigenvectors at every entry.

    The vector array has shape ``(*shape, 2, 2)`` as (branch, component) with
    branch 0 = plus. Left covectors equal the right vectors.
    """
    plus, minus, gap, disc = eigenvalues_on_grid(values)
    h11 = (values["omega_a"] + values["delta"]) - 0.5j * values["gamma"]
    h22 = values["omega_a"] - 0.5j * values["kappa"]
    energies = np.stack((plus, minus), axis=-1)
    vectors = biorthonormal_vectors(energies, h11[..., None], h22[..., None], values["g"][..., None])
    degenerate = (np.abs(gap) < floor * values["omega_a"]) | ~np.all(np.isfinite(vectors), axis=(-2, -1))
    return RawSpectrum(plus, minus, vectors, gap, disc, degenerate)


def neighbour_swaps(raw: RawSpectrum, axis: int, tolerance: float = AMBIGUITY_TOLERANCE) -> NDArray[np.bool_]:
    """Decide, for every adjacent pair along *axis*, whether raw labels exchange.

    Uses the overlap rule of branch continuation. Pairs touching a degenerate
    entry, or whose scores tie within *tolerance*, fall back to eigenvalue
    proximity.
    """
    n = raw.plus.shape[axis]

    def take(a: NDArray[Any], start: int, stop: int) -> NDArray[Any]:
        return np.take(a, np.arange(start, stop), axis=axis)

    prev_vec, cur_vec = take(raw.vectors, 0, n - 1), take(raw.vectors, 1, n)
    with np.errstate(invalid="ignore", over="ignore"):
        by_overlap, margin = swap_mask(prev_vec, prev_vec, cur_vec, cur_vec)

    prev_p, cur_p = take(raw.plus, 0, n - 1), take(raw.plus, 1, n)
    prev_m, cur_m = take(raw.minus, 0, n - 1), take(raw.minus, 1, n)
    crossed = np.abs(prev_p - cur_m) + np.abs(prev_m - cur_p)
    straight = np.abs(prev_p - cur_p) + np.abs(prev_m - cur_m)
    by_proximity = crossed < straight

    fallback = (
        take(raw.degenerate, 0, n - 1)
        | take(raw.degenerate, 1, n)
        | ~np.isfinite(margin)
        | (margin <= tolerance)
    )
    return np.where(fallback, by_proximity, by_overlap)


def seed_swap(plus: complex, minus: complex) -> bool:
    """True when the raw labels at the seed node must exchange.

    Plus is the branch with the larger real part, ties broken by the larger
    imaginary part.
    """
    return (plus.real, plus.imag) < (minus.real, minus.imag)


def _parity(swaps: NDArray[np.bool_], axis: int) -> NDArray[np.bool_]:
    """Cumulative exchange parity, False at index 0 along *axis*."""
    counts = np.cumsum(swaps, axis=axis, dtype=np.int64) % 2 == 1
    pad = [(0, 0)] * swaps.ndim
    pad[axis] = (1, 0)
    return np.pad(counts, pad, constant_values=False)


def continued_parity(raw: RawSpectrum) -> NDArray[np.bool_]:
    """Exchange mask making labels continuous along the first axis of *raw*."""
    seed = seed_swap(complex(raw.plus.flat[0]), complex(raw.minus.flat[0]))
    return _parity(neighbour_swaps(raw, axis=0), axis=0) ^ seed


def sample_surface(grid: GridSpec) -> SurfaceSample:
    """Sample both eigenvalue sheets over *grid* with continuous labels.

    The node with the smallest coordinates is labelled by real part, the
    first column is continued along ``axis_x`` and every row is then
    continued along ``axis_y``. Degenerate nodes keep coalesced values and a
    zero gap.
    """
    raw = raw_spectrum(grid.mesh())
    seed = seed_swap(complex(raw.plus[0, 0]), complex(raw.minus[0, 0]))

    down_first_column = _parity(neighbour_swaps(_column(raw, 0), axis=0), axis=0) ^ seed
    along_rows = _parity(neighbour_swaps(raw, axis=1), axis=1)
    exchange = down_first_column[:, None] ^ along_rows

    plus = np.where(exchange, raw.minus, raw.plus)
    minus = np.where(exchange, raw.plus, raw.minus)
    gap_abs = np.abs(raw.gap)
    logger.debug(
        "Sampled %s: %dx%d nodes, %d degenerate, %d label exchanges",
        grid.name,
        grid.nx,
        grid.ny,
        int(raw.degenerate.sum()),
        int(exchange.sum()),
    )
    return SurfaceSample(
        grid=grid,
        values_plus=plus,
        values_minus=minus,
        gap_abs=gap_abs,
        discriminant_abs=np.abs(raw.discriminant) / 4.0,
    )


def _column(raw: RawSpectrum, j: int) -> RawSpectrum:
    return RawSpectrum(
        raw.plus[:, j],
        raw.minus[:, j],
        raw.vectors[:, j],
        raw.gap[:, j],
        raw.discriminant[:, j],
        raw.degenerate[:, j],
    )
