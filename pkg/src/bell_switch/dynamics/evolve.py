"""Evolution along a loop with fidelity and branch tracking."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from bell_switch.dynamics.config import IntegratorConfig
from bell_switch.dynamics.continuation import continue_labels
from bell_switch.dynamics.fidelity import fidelity
from bell_switch.dynamics.integrators import adaptive_segment, rk4_segments
from bell_switch.dynamics.state import StateVector
from bell_switch.errors import DegenerateEigensystemError
from bell_switch.model.eigensystem import Eigensystem, Label, eigensystem, label_by_bell_overlap
from bell_switch.trajectory.loops import Direction, Loop

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EvolutionRecord:
    """Time series of one traversal of a loop.

    Attributes:
        times: Observation times from 0 to T.
        states: Unit-normalized states, shape ``(n, 2)``.
        log_norm: Log of the Euclidean norm of the unnormalized state.
        fidelity_plus: Fidelity on the plus branch per time.
        fidelity_minus: Fidelity on the minus branch per time.
        energies_plus: Plus-branch energy per time.
        energies_minus: Minus-branch energy per time.
        final_fidelity_plus: Fidelity at T on the plus eigenvector, labelled
            by the same rule as at t = 0.
        final_fidelity_minus: Fidelity at T on the minus eigenvector, labelled
            by the same rule as at t = 0.
        initial_label: Branch the initial state projects onto most.
        loop: The traversed loop.
        policy: Fidelity policy tag.
        labeling: Labelling mode tag.
        ambiguous_steps: Observation steps whose overlap scores tied, so the
            labels were carried by eigenvalue proximity or held.
    """

    times: NDArray[np.float64]
    states: NDArray[np.complex128]
    log_norm: NDArray[np.float64]
    fidelity_plus: NDArray[np.float64]
    fidelity_minus: NDArray[np.float64]
    energies_plus: NDArray[np.complex128]
    energies_minus: NDArray[np.complex128]
    final_fidelity_plus: float
    final_fidelity_minus: float
    initial_label: Label
    loop: Loop
    policy: str
    labeling: str
    ambiguous_steps: int = 0

    @property
    def direction(self) -> Direction:
        """Direction of the traversed loop."""
        return self.loop.direction

    @property
    def loop_id(self) -> str:
        """Provenance of the traversed loop."""
        return self.loop.loop_id

    @property
    def raw_norm(self) -> NDArray[np.float64]:
        """Euclidean norm of the unnormalized state (may overflow for long gain runs)."""
        return np.exp(self.log_norm)

    @property
    def final_state(self) -> StateVector:
        """Unit-normalized state at T."""
        return StateVector.from_array(self.states[-1])

    def final_fidelity(self, label: Label) -> float:
        """Endpoint fidelity of the labelled branch."""
        return self.final_fidelity_plus if label == "plus" else self.final_fidelity_minus


def _reference(es: Eigensystem) -> Eigensystem:
    # seed and endpoint labels never depend on the labelling mode
    return label_by_bell_overlap(es)


def _eigensystem_at(loop: Loop, t: float, cfg: IntegratorConfig) -> Eigensystem:
    try:
        return eigensystem(loop.evaluate(t), floor=cfg.degeneracy_floor, normalization=cfg.normalization)
    except DegenerateEigensystemError as e:
        raise DegenerateEigensystemError(
            f"Eigensystem degenerate at t={t:.9g} on {loop.loop_id}",
            cause=e,
            time=t,
            **e.details,
        ) from e


def initial_eigenstate(loop: Loop, label: Label, cfg: IntegratorConfig | None = None) -> StateVector:
    """Return the labelled right eigenvector at t = 0 with unit Euclidean norm."""
    cfg = cfg or IntegratorConfig()
    es = _reference(_eigensystem_at(loop, 0.0, cfg))
    return StateVector.from_array(es.right(label)).normalized()


def evolve(loop: Loop, psi0: StateVector, cfg: IntegratorConfig | None = None) -> EvolutionRecord:
    """Integrate the Schrödinger equation over one traversal of *loop*.

    The state is rescaled to unit norm whenever its norm leaves
    ``cfg.norm_bounds`` (if enabled); the accumulated log-norm is kept so the
    raw state can be reconstructed. Fidelities are evaluated at every
    observation time on unit-normalized states.

    Raises:
        StepUnderflowError: If the adaptive scheme underflows.
        DegenerateEigensystemError: If an observation point is degenerate.
        AmbiguousAssignmentError: If continued labels cannot be assigned.
    """
    cfg = cfg or IntegratorConfig()
    n_obs = cfg.samples
    times = np.linspace(0.0, loop.period, n_obs + 1)
    low, high = cfg.norm_bounds

    states = np.empty((n_obs + 1, 2), dtype=complex)
    log_norm = np.empty(n_obs + 1)
    psi = psi0.as_array()
    offset = 0.0
    rescales = 0

    def observe(k: int) -> None:
        n = float(np.linalg.norm(psi))
        states[k] = psi / n
        log_norm[k] = offset + math.log(n)

    observe(0)
    if cfg.scheme == "rk4":
        for k, maps in enumerate(rk4_segments(loop, cfg), start=1):
            for m in maps:
                psi = m @ psi
                if cfg.renormalize:
                    n = math.sqrt(float(np.vdot(psi, psi).real))
                    if not low <= n <= high:
                        offset += math.log(n)
                        psi = psi / n
                        rescales += 1
            observe(k)
    else:
        for k in range(1, n_obs + 1):
            psi = adaptive_segment(loop, psi, float(times[k - 1]), float(times[k]), cfg)
            if cfg.renormalize:
                n = float(np.linalg.norm(psi))
                if not low <= n <= high:
                    offset += math.log(n)
                    psi = psi / n
                    rescales += 1
            observe(k)
    if rescales:
        logger.debug("State rescaled %d times on %s", rescales, loop.loop_id)

    f_plus = np.empty(n_obs + 1)
    f_minus = np.empty(n_obs + 1)
    e_plus = np.empty(n_obs + 1, dtype=complex)
    e_minus = np.empty(n_obs + 1, dtype=complex)
    current: Eigensystem | None = None
    ambiguous = 0
    for k, t in enumerate(times):
        raw = _eigensystem_at(loop, float(t), cfg)
        if cfg.labeling == "principal":
            current = raw
        elif current is None:
            current = _reference(raw)
        else:
            current, decision = continue_labels(current, raw, tolerance=cfg.ambiguity_tolerance)
            if decision.rule != "overlap":
                ambiguous += 1
        f_plus[k], f_minus[k] = fidelity(states[k], current, cfg.fidelity_policy)
        e_plus[k], e_minus[k] = current.value_plus, current.value_minus

    if ambiguous:
        logger.debug("%d tied branch assignments on %s", ambiguous, loop.loop_id)

    endpoint = _reference(_eigensystem_at(loop, float(times[-1]), cfg))
    final_plus, final_minus = fidelity(states[-1], endpoint, cfg.fidelity_policy)
    start = _reference(_eigensystem_at(loop, 0.0, cfg))
    start_plus, start_minus = fidelity(states[0], start, cfg.fidelity_policy)

    return EvolutionRecord(
        times=times,
        states=states,
        log_norm=log_norm,
        fidelity_plus=f_plus,
        fidelity_minus=f_minus,
        energies_plus=e_plus,
        energies_minus=e_minus,
        final_fidelity_plus=final_plus,
        final_fidelity_minus=final_minus,
        initial_label="plus" if start_plus >= start_minus else "minus",
        loop=loop,
        policy=cfg.fidelity_policy,
        labeling=cfg.labeling,
        ambiguous_steps=ambiguous,
    )
