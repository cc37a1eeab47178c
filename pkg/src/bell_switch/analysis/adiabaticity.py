"""Adiabaticity diagnostics along a loop."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from scipy.integrate import trapezoid

from bell_switch.dynamics.continuation import AMBIGUITY_TOLERANCE, branch_continue
from bell_switch.model.eigensystem import DEGENERACY_FLOOR, Eigensystem, eigensystem, label_by_bell_overlap
from bell_switch.model.hamiltonian import discriminant, gap_from_discriminant
from bell_switch.trajectory.loops import Loop

#: Smallest sample count accepted by :func:`adiabaticity_metrics`.
MIN_SAMPLES = 16


@dataclass(frozen=True)
class AdiabaticityMetrics:
    """How adiabatic one traversal of a loop is.

    Attributes:
        min_gap: Smallest |Δ_E| over the samples.
        max_coupling_rate: Largest |⟨left_∓|d/dt right_±⟩|.
        imag_gap_integral: ∫|Im Δ_E| dt over one traversal.
        n_samples: Sample intervals used.
    """

    min_gap: float
    max_coupling_rate: float
    imag_gap_integral: float
    n_samples: int

    def as_dict(self) -> dict[str, float | int]:
        return asdict(self)


def continued_eigensystems(
    loop: Loop,
    times: np.ndarray,
    *,
    floor: float = DEGENERACY_FLOOR,
    tolerance: float = AMBIGUITY_TOLERANCE,
) -> list[Eigensystem]:
    """Eigensystems at *times* with Bell-overlap labels at the first time and
    continued, phase-smoothed labels afterwards.

    Raises:
        DegenerateEigensystemError: At a degenerate sample.
        AmbiguousAssignmentError: When labels cannot be carried between samples.
    """
    systems: list[Eigensystem] = []
    for t in times:
        raw = eigensystem(loop.evaluate(float(t)), floor=floor)
        if systems:
            systems.append(branch_continue(systems[-1], raw, tolerance=tolerance))
        else:
            systems.append(label_by_bell_overlap(raw))
    return systems


def adiabaticity_metrics(
    loop: Loop,
    n_samples: int = 1024,
    *,
    floor: float = DEGENERACY_FLOOR,
) -> AdiabaticityMetrics:
    """Sample the gap and the nonadiabatic coupling along one traversal.

    The gap metrics use |Δ_E| and |Im Δ_E|, which do not depend on labels.
    The coupling rate uses central differences of the continued right
    eigenvectors at interior samples.

    Raises:
        ValueError: If *n_samples* is below 16.
        DegenerateEigensystemError: At a degenerate sample.
    """
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"n_samples must be at least {MIN_SAMPLES}, got {n_samples}")
    times = np.linspace(0.0, loop.period, n_samples + 1)
    p = loop.sample(times)
    gaps = gap_from_discriminant(discriminant(p["delta"], p["g"], p["gamma"], p["kappa"]))
    systems = continued_eigensystems(loop, times, floor=floor)

    rights_plus = np.array([es.right_plus for es in systems])
    rights_minus = np.array([es.right_minus for es in systems])
    lefts_plus = np.array([es.left_plus for es in systems])
    lefts_minus = np.array([es.left_minus for es in systems])

    step = 2.0 * (times[1] - times[0])
    d_plus = (rights_plus[2:] - rights_plus[:-2]) / step
    d_minus = (rights_minus[2:] - rights_minus[:-2]) / step
    to_minus = np.abs(np.einsum("nk,nk->n", lefts_minus[1:-1], d_plus))
    to_plus = np.abs(np.einsum("nk,nk->n", lefts_plus[1:-1], d_minus))

    return AdiabaticityMetrics(
        min_gap=float(np.min(np.abs(gaps))),
        max_coupling_rate=float(np.max(np.maximum(to_minus, to_plus))),
        imag_gap_integral=float(trapezoid(np.abs(gaps.imag), times)),
        n_samples=n_samples,
    )
