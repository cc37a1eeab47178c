"""Exceptional-point search and Bell-endpoint checks."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping, Sequence

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import least_squares

from bell_switch.errors import NoEPFoundError, NonConvergedError
from bell_switch.model.hamiltonian import discriminant
from bell_switch.model.parameters import PARAMETER_NAMES, ParameterName, ParameterPoint, complete_parameters

logger = logging.getLogger(__name__)

#: Threshold on |Δ_E²| (units of ω_a²) below which a point counts as exceptional.
EP_TOLERANCE = 1e-10

Box = tuple[tuple[float, float], tuple[float, float]]


def _check_axes(
    free_axes: Sequence[str], fixed: Mapping[str, float], alpha: float | None
) -> tuple[ParameterName, ParameterName]:
    if len(free_axes) != 2 or free_axes[0] == free_axes[1]:
        raise ValueError(f"Exactly two distinct free axes are required, got {tuple(free_axes)}")
    for axis in free_axes:
        if axis not in PARAMETER_NAMES:
            raise ValueError(f"Unknown parameter axis: {axis!r}")
        if axis in fixed:
            raise ValueError(f"Axis {axis!r} is both free and fixed")
        if axis == "kappa" and alpha is not None:
            raise ValueError("kappa cannot be a free axis while alpha ties it to gamma")
    return free_axes[0], free_axes[1]  # type: ignore[return-value]


def _plane_discriminant(
    x: NDArray[np.float64],
    y: NDArray[np.float64],
    axes: tuple[str, str],
    fixed: Mapping[str, float],
    alpha: float | None,
) -> NDArray[np.complex128]:
    values = dict(fixed)
    values[axes[0]] = x
    values[axes[1]] = y
    full = complete_parameters(values, alpha=alpha)
    return discriminant(full["delta"], full["g"], full["gamma"], full["kappa"])


def _discriminant_jacobian(
    point: Mapping[str, float], axes: tuple[str, str], alpha: float | None
) -> NDArray[np.float64]:
    u = point["gamma"] - point["kappa"]
    delta = point["delta"]
    du = 2.0 * u + 4.0j * delta
    partials = {
        "omega_a": 0.0,
        "delta": -8.0 * delta + 4.0j * u,
        "g": -32.0 * point["g"],
        "gamma": du * (1.0 - alpha if alpha is not None else 1.0),
        "kappa": -du,
    }
    cols = [complex(partials[axis]) for axis in axes]
    return np.array([[c.real for c in cols], [c.imag for c in cols]])


def minimize_discriminant(
    fixed: Mapping[str, float],
    free_axes: Sequence[str],
    start: tuple[float, float],
    box: Box,
    *,
    alpha: float | None = None,
    max_nfev: int = 200,
) -> tuple[tuple[float, float], float, int]:
    """Drive |Δ_E²| towards zero from *start* without leaving *box*.

    Returns:
        The final point, its |Δ_E²| in units of ω_a² and the solver status
        (0 when the evaluation budget ran out).
    """
    axes = _check_axes(free_axes, fixed, alpha)
    lower = np.array([box[0][0], box[1][0]], dtype=float)
    upper = np.array([box[0][1], box[1][1]], dtype=float)
    if np.any(lower >= upper):
        raise ValueError(f"Search box must have positive extent, got {box}")
    omega_a = float(fixed.get("omega_a", 1.0))
    scale = omega_a * omega_a

    def residual(xy: NDArray[np.float64]) -> NDArray[np.float64]:
        disc = complex(_plane_discriminant(np.float64(xy[0]), np.float64(xy[1]), axes, fixed, alpha))
        return np.array([disc.real, disc.imag]) / scale

    def jacobian(xy: NDArray[np.float64]) -> NDArray[np.float64]:
        values = dict(fixed)
        values[axes[0]], values[axes[1]] = float(xy[0]), float(xy[1])
        full = {k: float(v) for k, v in complete_parameters(values, alpha=alpha).items()}
        return _discriminant_jacobian(full, axes, alpha) / scale

    result = least_squares(
        residual,
        np.clip(np.asarray(start, dtype=float), lower, upper),
        jac=jacobian,
        bounds=(lower, upper),
        method="trf",
        ftol=1e-15,
        xtol=1e-15,
        gtol=1e-15,
        max_nfev=max_nfev,
    )
    magnitude = float(np.hypot(*result.fun)) / 4.0
    return (float(result.x[0]), float(result.x[1])), magnitude, int(result.status)


def find_ep(
    fixed: Mapping[str, float],
    free_axes: Sequence[str],
    seed: tuple[float, float],
    box: Box,
    *,
    alpha: float | None = None,
    tol: float = EP_TOLERANCE,
    scan: int = 33,
    extra_starts: int = 4,
    max_nfev: int = 200,
) -> ParameterPoint:
    """Locate an exceptional point in a two-parameter plane.

    Solves Re(Δ_E²) = Im(Δ_E²) = 0 over the free axes with bounded least
    squares restricted to *box*. The seed and the best nodes of a coarse scan
    of the box serve as starts; when several roots are found (the degeneracy
    set can be a curve) the one nearest the seed is returned.

    Args:
        fixed: Values of the parameters that are not free.
        free_axes: Names of the two free parameters.
        seed: Starting point in the free axes.
        box: Search interval per free axis.
        alpha: Ratio κ/γ applied when given.
        tol: Acceptance threshold on |Δ_E²| in units of ω_a².
        scan: Nodes per axis of the coarse scan used for extra starts.
        extra_starts: Number of scan nodes used as additional starts.
        max_nfev: Evaluation budget per start.

    Returns:
        The exceptional point.

    Raises:
        NoEPFoundError: If no root lies inside the box.
        NonConvergedError: If every start exhausts its evaluation budget.
    """
    axes = _check_axes(free_axes, fixed, alpha)
    lower = np.array([box[0][0], box[1][0]], dtype=float)
    upper = np.array([box[0][1], box[1][1]], dtype=float)
    if np.any(lower >= upper):
        raise ValueError(f"Search box must have positive extent, got {box}")

    xs = np.linspace(lower[0], upper[0], scan)
    ys = np.linspace(lower[1], upper[1], scan)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    coarse = np.abs(_plane_discriminant(gx, gy, axes, fixed, alpha))
    order = np.argsort(coarse, axis=None, kind="stable")[:extra_starts]
    starts = [np.clip(np.asarray(seed, dtype=float), lower, upper)]
    starts += [np.array([gx.flat[i], gy.flat[i]]) for i in order]

    roots: list[NDArray[np.float64]] = []
    best: tuple[float, tuple[float, float]] | None = None
    exhausted = 0
    for start in starts:
        point, magnitude, status = minimize_discriminant(
            fixed, axes, (float(start[0]), float(start[1])), box, alpha=alpha, max_nfev=max_nfev
        )
        if best is None or magnitude < best[0]:
            best = (magnitude, point)
        if magnitude < tol:
            roots.append(np.asarray(point))
        elif status == 0:
            exhausted += 1

    if roots:
        target = starts[0]
        nearest = min(roots, key=lambda r: float(np.hypot(*(r - target))))
        values = dict(fixed)
        values[axes[0]], values[axes[1]] = float(nearest[0]), float(nearest[1])
        logger.debug("EP located at %s=%g, %s=%g", axes[0], nearest[0], axes[1], nearest[1])
        return ParameterPoint.from_mapping(values, alpha=alpha)

    assert best is not None
    if exhausted == len(starts):
        raise NonConvergedError(
            f"Root finder exhausted {max_nfev} evaluations from every start", starts=len(starts)
        )
    raise NoEPFoundError(
        f"No exceptional point in the search box; smallest |Δ_E²| = {best[0]:.3e}",
        best_point=best[1],
        best_discriminant=best[0],
    )


def bell_endpoint_check(p: ParameterPoint, tol: float = 1e-12) -> bool:
    """Return True when the eigenvectors at *p* are exact Bell states.

    That holds when δ = 0 and γ = κ, up to *tol*.
    """
    return math.fabs(p.delta) <= tol and math.fabs(p.gamma - p.kappa) <= tol
