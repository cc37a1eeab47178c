"""Time stepping for i∂ₜψ = H(t)ψ.

Both schemes advance from one observation time to the next and hand the
state back to the caller, which owns renormalization and recording.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import solve_ivp

from bell_switch.dynamics.config import IntegratorConfig
from bell_switch.errors import StepUnderflowError
from bell_switch.trajectory.loops import Loop

logger = logging.getLogger(__name__)


def rk4_propagators(loop: Loop, t0: float, h: float, n_steps: int) -> NDArray[np.complex128]:
    """Return the one-step RK4 maps M_j with ψ_{j+1} = M_j ψ_j.

    The equation is linear, so each classical RK4 step is a fixed 2×2 matrix
    built from H at the start, midpoint and end of the step.

    Returns:
        Array of shape ``(n_steps, 2, 2)``.
    """
    grid = t0 + h * np.arange(n_steps + 1)
    a_nodes = -1j * loop.hamiltonians(grid)
    a_mid = -1j * loop.hamiltonians(grid[:-1] + 0.5 * h)
    a0, a1 = a_nodes[:-1], a_nodes[1:]
    eye = np.broadcast_to(np.eye(2, dtype=complex), a0.shape)

    k1 = a0
    k2 = a_mid @ (eye + 0.5 * h * k1)
    k3 = a_mid @ (eye + 0.5 * h * k2)
    k4 = a1 @ (eye + h * k3)
    return eye + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_segments(
    loop: Loop, cfg: IntegratorConfig
) -> Iterator[NDArray[np.complex128]]:
    """Yield, per observation interval, the stack of RK4 maps to apply in order."""
    per_sample = cfg.steps_per_sample
    h = loop.period / (cfg.samples * per_sample)
    maps = rk4_propagators(loop, 0.0, h, cfg.samples * per_sample)
    for k in range(cfg.samples):
        yield maps[k * per_sample : (k + 1) * per_sample]


def adaptive_segment(
    loop: Loop,
    psi: NDArray[np.complex128],
    t_start: float,
    t_end: float,
    cfg: IntegratorConfig,
) -> NDArray[np.complex128]:
    """Advance *psi* from *t_start* to *t_end* with an embedded Runge-Kutta pair.

    Raises:
        StepUnderflowError: If the solver fails or takes a step below
            ``cfg.min_step`` before the segment end.
    """

    def rhs(t: float, y: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return -1j * (loop.hamiltonians(np.array([t]))[0] @ y)

    sol = solve_ivp(
        rhs,
        (t_start, t_end),
        psi,
        method=cfg.method,
        rtol=cfg.rtol,
        atol=cfg.atol,
    )
    if sol.status < 0:
        raise StepUnderflowError(
            f"Adaptive integration failed at t={sol.t[-1]:.6g}: {sol.message}",
            time=float(sol.t[-1]),
            step=float(np.diff(sol.t)[-1]) if sol.t.size > 1 else 0.0,
        )
    # the last step is clipped to the segment end and may legitimately be short
    steps = np.diff(sol.t)[:-1]
    if steps.size and float(steps.min()) < cfg.min_step:
        k = int(np.argmin(steps))
        raise StepUnderflowError(
            f"Adaptive step {steps[k]:.3e} below floor {cfg.min_step:.3e} at t={sol.t[k]:.6g}",
            time=float(sol.t[k]),
            step=float(steps[k]),
        )
    return sol.y[:, -1]
