"""Degeneracy level sets: where the imaginary or real parts of the sheets meet."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import brentq

from bell_switch.errors import EmptyLevelSetError
from bell_switch.model.hamiltonian import discriminant, gap_from_discriminant
from bell_switch.spectrum.grid import SurfaceSample

logger = logging.getLogger(__name__)

#: Residual bound on refined contour vertices, in units of ω_a.
CONTOUR_TOLERANCE = 1e-6

# An edge is ("x" | "y", i, j): "x" joins (i, j)-(i+1, j), "y" joins (i, j)-(i, j+1).
EdgeKey = tuple[str, int, int]


class LevelSetKind(StrEnum):
    """Which pair of sheets is intersected."""

    D_LINE = "d_line"
    """Im E₊ = Im E₋."""
    L_LINE = "l_line"
    """Re E₊ = Re E₋."""


@dataclass(frozen=True, eq=False)
class LevelSet:
    """Polylines in the grid plane on which one pair of sheets coincides.

    Attributes:
        kind: D line or L line.
        segments: Polylines as ``(m, 2)`` arrays of plane coordinates.
        residuals: Largest defining-equation residual of each polyline.
        grid_name: Name of the sampled grid.
    """

    kind: LevelSetKind
    segments: list[NDArray[np.float64]] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)
    grid_name: str = ""

    @property
    def max_residual(self) -> float:
        """Largest residual over all vertices."""
        return max(self.residuals, default=0.0)

    @property
    def vertex_count(self) -> int:
        return sum(len(s) for s in self.segments)


def _labelled_difference(sample: SurfaceSample, kind: LevelSetKind) -> NDArray[np.float64]:
    diff = sample.values_plus - sample.values_minus
    return diff.imag if kind is LevelSetKind.D_LINE else diff.real


class _EdgeRefiner:
    """Locates the zero of the labelled difference along one grid edge."""

    def __init__(self, sample: SurfaceSample, kind: LevelSetKind, f: NDArray[np.float64]) -> None:
        self._grid = sample.grid
        self._kind = kind
        self._f = f
        self._diff = sample.values_plus - sample.values_minus
        self._x = sample.grid.x_values()
        self._y = sample.grid.y_values()

    def _gap(self, x: float, y: float) -> complex:
        p = self._grid.parameters(x, y)
        return complex(gap_from_discriminant(discriminant(p["delta"], p["g"], p["gamma"], p["kappa"])))

    def _part(self, z: complex) -> float:
        return z.imag if self._kind is LevelSetKind.D_LINE else z.real

    def residual(self, x: float, y: float) -> float:
        """Label-free residual |Im Δ_E| or |Re Δ_E| at (x, y)."""
        return abs(self._part(self._gap(x, y)))

    def crossing(self, edge: EdgeKey) -> tuple[float, float]:
        axis, i, j = edge
        i2, j2 = (i + 1, j) if axis == "x" else (i, j + 1)
        a = np.array([self._x[i], self._y[j]])
        b = np.array([self._x[i2], self._y[j2]])
        fa, fb = self._f[i, j], self._f[i2, j2]
        da, db = self._diff[i, j], self._diff[i2, j2]

        def along(s: float) -> float:
            # Pick the branch sign of Δ_E closest to the interpolated labelled difference.
            xy = (1.0 - s) * a + s * b
            gap = self._gap(float(xy[0]), float(xy[1]))
            guide = (1.0 - s) * da + s * db
            value = gap if abs(gap - guide) <= abs(gap + guide) else -gap
            return self._part(value)

        if fa == 0.0:
            s = 0.0
        elif fb == 0.0:
            s = 1.0
        else:
            try:
                s = float(brentq(along, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps))
            except (ValueError, RuntimeError):
                s = float(fa / (fa - fb))
        xy = (1.0 - s) * a + s * b
        return float(xy[0]), float(xy[1])


def _cell_segments(
    signs: NDArray[np.bool_], f: NDArray[np.float64], i: int, j: int
) -> list[tuple[EdgeKey, EdgeKey]]:
    """Marching-squares pairing of the crossed edges of cell (i, j)."""
    corners = (signs[i, j], signs[i + 1, j], signs[i + 1, j + 1], signs[i, j + 1])
    edges: tuple[EdgeKey, ...] = (("x", i, j), ("y", i + 1, j), ("x", i, j + 1), ("y", i, j))
    crossed = [k for k in range(4) if corners[k] != corners[(k + 1) % 4]]
    if len(crossed) == 2:
        return [(edges[crossed[0]], edges[crossed[1]])]
    if len(crossed) == 4:
        centre = 0.25 * (f[i, j] + f[i + 1, j] + f[i + 1, j + 1] + f[i, j + 1]) >= 0.0
        if centre == corners[0]:
            return [(edges[0], edges[1]), (edges[2], edges[3])]
        return [(edges[3], edges[0]), (edges[1], edges[2])]
    return []


def _join(pairs: list[tuple[EdgeKey, EdgeKey]]) -> list[list[EdgeKey]]:
    """Chain edge pairs into polylines; open chains first, then closed ones."""
    neighbours: dict[EdgeKey, list[EdgeKey]] = defaultdict(list)
    for a, b in pairs:
        neighbours[a].append(b)
        neighbours[b].append(a)

    used: set[frozenset[EdgeKey]] = set()
    chains: list[list[EdgeKey]] = []

    def walk(start: EdgeKey) -> list[EdgeKey]:
        chain = [start]
        current = start
        while True:
            step = next(
                (n for n in neighbours[current] if frozenset((current, n)) not in used),
                None,
            )
            if step is None:
                return chain
            used.add(frozenset((current, step)))
            chain.append(step)
            current = step

    ends = sorted(k for k, v in neighbours.items() if len(v) == 1)
    for key in ends:
        if any(frozenset((key, n)) not in used for n in neighbours[key]):
            chains.append(walk(key))
    for key in sorted(neighbours):
        if any(frozenset((key, n)) not in used for n in neighbours[key]):
            chains.append(walk(key))
    return chains


def degeneracy_lines(
    sample: SurfaceSample,
    kind: LevelSetKind | str,
    *,
    tolerance: float = CONTOUR_TOLERANCE,
) -> LevelSet:
    """Extract the zero contour of Im(E₊ − E₋) or Re(E₊ − E₋).

    Sign changes of the labelled difference between neighbouring nodes mark
    crossed edges (exact zeros count as non-negative); each crossing is
    refined on its edge with Brent's method and cells are joined by marching
    squares into polylines.

    Args:
        sample: A labelled surface sample.
        kind: ``D_LINE`` or ``L_LINE``.
        tolerance: Residual bound on refined vertices, in units of ω_a.

    Raises:
        EmptyLevelSetError: If the difference does not change sign anywhere.
    """
    kind = LevelSetKind(kind)
    f = _labelled_difference(sample, kind)
    signs = f >= 0.0
    cells_x = signs[:-1, :] != signs[1:, :]
    cells_y = signs[:, :-1] != signs[:, 1:]
    if not (cells_x.any() or cells_y.any()):
        logger.warning("No %s on grid %s", kind, sample.grid.name)
        raise EmptyLevelSetError(
            f"{kind} is empty on grid {sample.grid.name!r}: no sign change of the difference",
            kind=str(kind),
        )

    touched = np.zeros((sample.grid.nx - 1, sample.grid.ny - 1), dtype=bool)
    touched |= cells_x[:, :-1] | cells_x[:, 1:]
    touched |= cells_y[:-1, :] | cells_y[1:, :]

    pairs: list[tuple[EdgeKey, EdgeKey]] = []
    for i, j in np.argwhere(touched):
        pairs.extend(_cell_segments(signs, f, int(i), int(j)))

    refiner = _EdgeRefiner(sample, kind, f)
    points: dict[EdgeKey, tuple[float, float]] = {}
    segments: list[NDArray[np.float64]] = []
    residuals: list[float] = []
    scale = sample.grid.omega_a
    for chain in _join(pairs):
        for key in chain:
            if key not in points:
                points[key] = refiner.crossing(key)
        vertices = np.array([points[key] for key in chain])
        worst = max(refiner.residual(x, y) for x, y in vertices) / scale
        if worst > tolerance:
            logger.warning(
                "%s polyline on %s has residual %.3e above %.1e",
                kind,
                sample.grid.name,
                worst,
                tolerance,
            )
        segments.append(vertices)
        residuals.append(worst)

    logger.debug("%s on %s: %d polylines", kind, sample.grid.name, len(segments))
    return LevelSet(kind=kind, segments=segments, residuals=residuals, grid_name=sample.grid.name)
