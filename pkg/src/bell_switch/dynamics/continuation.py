"""Branch continuation of eigenvalue labels along paths and grids.

Labels are carried by eigenvector overlap. When the two overlap scores tie,
as they do wherever both eigenvectors have components of equal modulus, the
eigenvalue distances decide; when those tie as well the previous labelling
relative to the principal branch is held. Only a pair that is degenerate at
both ends is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from bell_switch.errors import AmbiguousAssignmentError
from bell_switch.model.eigensystem import Eigensystem
from bell_switch.model.hamiltonian import eigenvalue_gap

#: Default tolerance below which the two assignment scores count as equal.
AMBIGUITY_TOLERANCE = 1e-6

AssignmentRule = Literal["overlap", "proximity", "held"]


@dataclass(frozen=True)
class Assignment:
    """Outcome of one labelling decision.

    Attributes:
        swap: Whether the raw labels of the current system are exchanged.
        rule: Rule that decided.
        score_keep: Overlap score of the unchanged labels.
        score_swap: Overlap score of the exchanged labels.
    """

    swap: bool
    rule: AssignmentRule
    score_keep: float
    score_swap: float


def assignment_scores(previous: Eigensystem, current: Eigensystem) -> tuple[float, float]:
    """Return (keep, swap) overlap scores of *current* against *previous*."""
    overlap = np.abs(previous.lefts @ current.rights)
    keep = float(overlap[0, 0] + overlap[1, 1])
    swap = float(overlap[0, 1] + overlap[1, 0])
    return keep, swap


def proximity_scores(previous: Eigensystem, current: Eigensystem) -> tuple[float, float]:
    """Return (straight, crossed) summed eigenvalue distances; smaller wins."""
    straight = abs(previous.value_plus - current.value_plus) + abs(previous.value_minus - current.value_minus)
    crossed = abs(previous.value_plus - current.value_minus) + abs(previous.value_minus - current.value_plus)
    return straight, crossed


def _principal_swapped(es: Eigensystem) -> bool:
    # continued labels differ from the principal ones exactly when the gap flips sign
    if es.point is None:
        return False
    principal = eigenvalue_gap(es.point)
    return abs(es.gap + principal) < abs(es.gap - principal)


def choose_assignment(
    previous: Eigensystem,
    current_raw: Eigensystem,
    *,
    tolerance: float = AMBIGUITY_TOLERANCE,
) -> Assignment:
    """Decide whether the raw labels of *current_raw* must be exchanged.

    Raises:
        AmbiguousAssignmentError: If overlaps and eigenvalue distances both tie
            and both gaps are below *tolerance*.
    """
    keep, swap = assignment_scores(previous, current_raw)
    if abs(keep - swap) > tolerance:
        return Assignment(swap > keep, "overlap", keep, swap)

    straight, crossed = proximity_scores(previous, current_raw)
    if abs(straight - crossed) > tolerance:
        return Assignment(crossed < straight, "proximity", keep, swap)

    if max(abs(previous.gap), abs(current_raw.gap)) <= tolerance:
        raise AmbiguousAssignmentError(
            f"Branch assignment is ambiguous (keep={keep:.9g}, swap={swap:.9g}, "
            f"gap={abs(current_raw.gap):.3e}); refine the step",
            score_keep=keep,
            score_swap=swap,
        )
    held = _principal_swapped(previous) != _principal_swapped(current_raw)
    return Assignment(held, "held", keep, swap)


def continue_labels(
    previous: Eigensystem,
    current_raw: Eigensystem,
    *,
    tolerance: float = AMBIGUITY_TOLERANCE,
) -> tuple[Eigensystem, Assignment]:
    """Like :func:`branch_continue`, also returning the decision taken."""
    decision = choose_assignment(previous, current_raw, tolerance=tolerance)
    current = current_raw.swapped() if decision.swap else current_raw

    phases = []
    for label in ("plus", "minus"):
        ov = complex(previous.left(label) @ current.right(label))
        phases.append(ov.conjugate() / abs(ov) if ov != 0 else 1.0)
    return current.rephased(phases[0], phases[1]), decision


def branch_continue(
    previous: Eigensystem,
    current_raw: Eigensystem,
    *,
    tolerance: float = AMBIGUITY_TOLERANCE,
) -> Eigensystem:
    """Carry the labels of *previous* over to *current_raw*.

    Chooses the labelling that maximizes Σ_n |⟨left_n^prev|right_n^cur⟩|,
    falling back to eigenvalue proximity and then to the held labelling on
    ties, and fixes phases so each ⟨left_n^prev|right_n^cur⟩ is real and
    positive.

    Raises:
        AmbiguousAssignmentError: At a tie between two near-degenerate systems.
    """
    return continue_labels(previous, current_raw, tolerance=tolerance)[0]


def swap_mask(
    prev_lefts: NDArray[np.complex128],
    prev_rights: NDArray[np.complex128],
    cur_lefts: NDArray[np.complex128],
    cur_rights: NDArray[np.complex128],
) -> tuple[NDArray[np.bool_], NDArray[np.float64]]:
    """Vectorized assignment rule for many (previous, current) pairs.

    Arrays hold vectors along the last axis and the two branches along the
    axis before it: shape ``(..., 2, 2)`` as (branch, component).

    Returns:
        Boolean mask of pairs whose labels must be exchanged, and the
        absolute score difference for each pair.
    """
    ov = np.abs(np.einsum("...nk,...mk->...nm", prev_lefts, cur_rights))
    keep = ov[..., 0, 0] + ov[..., 1, 1]
    swap = ov[..., 0, 1] + ov[..., 1, 0]
    return swap > keep, np.abs(keep - swap)
