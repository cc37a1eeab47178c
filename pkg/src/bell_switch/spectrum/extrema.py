"""Minimum-gap search: exceptional points versus avoided ones."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from bell_switch.errors import SimulationError
from bell_switch.model.exceptional import EP_TOLERANCE, minimize_discriminant
from bell_switch.model.hamiltonian import discriminant
from bell_switch.spectrum.grid import SurfaceSample

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinGapReport:
    """Where the two sheets come closest on a grid.

    Attributes:
        point: Refined plane coordinates of the minimum.
        gap: |Δ_E| at ``point``.
        discriminant: |Δ_E²| at ``point``, in units of ω_a².
        is_ep: True when ``discriminant`` is below the EP tolerance. The
            tolerance bounds |Δ_E²| in units of ω_a², not |Δ_E|.
        node: Grid indices of the node the refinement started from.
        method: ``"node"``, ``"quadratic"`` or ``"least_squares"``.
        reference: The grid's reference point, when it has one.
        reference_gap: |Δ_E| at ``reference``.
        reference_discriminant: |Δ_E²| at ``reference``.
        grid_name: Name of the sampled grid.
        axes: Axis names of the plane.
    """

    point: tuple[float, float]
    gap: float
    discriminant: float
    is_ep: bool
    node: tuple[int, int]
    method: str
    reference: tuple[float, float] | None = None
    reference_gap: float | None = None
    reference_discriminant: float | None = None
    grid_name: str = ""
    axes: tuple[str, str] = ("x", "y")

    def as_dict(self) -> dict[str, object]:
        """JSON-ready view of the report."""
        return {
            "grid": self.grid_name,
            "axes": list(self.axes),
            "point": list(self.point),
            "gap": self.gap,
            "discriminant": self.discriminant,
            "is_ep": self.is_ep,
            "node": list(self.node),
            "method": self.method,
            "reference": list(self.reference) if self.reference is not None else None,
            "reference_gap": self.reference_gap,
            "reference_discriminant": self.reference_discriminant,
        }


def _candidate_node(sample: SurfaceSample, tol: float) -> tuple[int, int]:
    """Argmin of |Δ_E²|; ties go to the node nearest the reference point."""
    d = sample.discriminant_abs
    lowest = float(d.min())
    scale = sample.grid.omega_a**2
    threshold = tol * scale if lowest < tol * scale else lowest
    ties = np.argwhere(d <= threshold)
    reference = sample.grid.reference
    if reference is None or len(ties) == 1:
        i, j = ties[0]
        return int(i), int(j)
    x, y = sample.grid.x_values(), sample.grid.y_values()
    dist = np.hypot(x[ties[:, 0]] - reference[0], y[ties[:, 1]] - reference[1])
    i, j = ties[int(np.argmin(dist))]
    return int(i), int(j)


def _stencil(n: int, k: int) -> slice:
    start = min(max(k - 1, 0), n - 3)
    return slice(start, start + 3)


def _quadratic_minimum(
    xs: NDArray[np.float64], ys: NDArray[np.float64], z: NDArray[np.float64]
) -> tuple[float, float] | None:
    """Stationary point of a least-squares quadric over a 3×3 stencil."""
    xc, yc = xs[1], ys[1]
    hx, hy = xs[2] - xs[1], ys[2] - ys[1]
    u, v = np.meshgrid((xs - xc) / hx, (ys - yc) / hy, indexing="ij")
    u, v, z = u.ravel(), v.ravel(), z.ravel()
    design = np.column_stack((np.ones_like(u), u, v, u * u, u * v, v * v))
    coef, *_ = np.linalg.lstsq(design, z, rcond=None)
    _, b, c, d, e, f = coef
    hessian = np.array([[2.0 * d, e], [e, 2.0 * f]])
    if np.linalg.det(hessian) <= 0 or hessian[0, 0] <= 0:
        return None
    su, sv = np.linalg.solve(hessian, -np.array([b, c]))
    su, sv = float(np.clip(su, -1.0, 1.0)), float(np.clip(sv, -1.0, 1.0))
    return float(xc + su * hx), float(yc + sv * hy)


def locate_min_gap(sample: SurfaceSample, *, tol: float = EP_TOLERANCE) -> MinGapReport:
    """Find the minimum of |Δ_E| on *sample* and decide EP versus avoided EP.

    The grid argmin of |Δ_E²| is refined by a quadratic fit of |Δ_E| on its
    3×3 stencil and by bounded least squares on the discriminant inside the
    stencil; the candidate with the smallest exact discriminant wins. A
    point is exceptional when |Δ_E²| < ``tol``·ω_a².
    """
    grid = sample.grid
    scale = grid.omega_a**2
    x, y = grid.x_values(), grid.y_values()
    i, j = _candidate_node(sample, tol)

    def exact(px: float, py: float) -> float:
        p = grid.parameters(px, py)
        return float(abs(discriminant(p["delta"], p["g"], p["gamma"], p["kappa"])) / 4.0)

    best = ((float(x[i]), float(y[j])), float(sample.discriminant_abs[i, j]), "node")
    if best[1] >= tol * scale:
        sx, sy = _stencil(grid.nx, i), _stencil(grid.ny, j)
        fitted = _quadratic_minimum(x[sx], y[sy], sample.gap_abs[sx, sy])
        if fitted is not None:
            value = exact(*fitted)
            if value < best[1]:
                best = (fitted, value, "quadratic")

        box = ((float(x[sx][0]), float(x[sx][-1])), (float(y[sy][0]), float(y[sy][-1])))
        try:
            point, value, _ = minimize_discriminant(
                grid.fixed, grid.axes, best[0], box, alpha=grid.alpha
            )
        except (ValueError, SimulationError) as exc:
            logger.debug("Least-squares refinement skipped: %s", exc)
        else:
            value = exact(*point)
            if value < best[1]:
                best = (point, value, "least_squares")

    point, value, method = best
    reference = grid.reference
    ref_disc = exact(*reference) if reference is not None else None
    report = MinGapReport(
        point=point,
        gap=math.sqrt(value),
        discriminant=value,
        is_ep=value < tol * scale,
        node=(i, j),
        method=method,
        reference=reference,
        reference_gap=math.sqrt(ref_disc) if ref_disc is not None else None,
        reference_discriminant=ref_disc,
        grid_name=grid.name,
        axes=grid.axes,
    )
    logger.info(
        "Minimum gap on %s at (%.6g, %.6g): |gap|=%.3e, EP=%s",
        grid.name,
        point[0],
        point[1],
        report.gap,
        report.is_ep,
    )
    return report
