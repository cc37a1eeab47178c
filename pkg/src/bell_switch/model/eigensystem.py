"""Biorthogonal eigensystem of the complex-symmetric Hamiltonian."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from bell_switch.errors import DegenerateEigensystemError
from bell_switch.model.hamiltonian import (
    build_hamiltonian,
    discriminant,
    eigenvalues_from_gap,
    gap_from_discriminant,
)
from bell_switch.model.parameters import ParameterPoint

Label = Literal["plus", "minus"]
Normalization = Literal["exact", "literal"]

#: Default degeneracy floor on |Δ_E|, in units of ω_a.
DEGENERACY_FLOOR = 1e-12

_BELL_PLUS = np.array([1.0, 1.0]) / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class Eigensystem:
    """Eigenvalues with right vectors and left covectors.

    For the complex-symmetric Hamiltonian the left covector of each branch is
    the transpose (not the conjugate) of its right vector. Under ``"exact"``
    normalization ⟨left_n|right_m⟩ = δ_nm.

    Attributes:
        value_plus: Energy of the plus branch.
        value_minus: Energy of the minus branch.
        right_plus: Right eigenvector of the plus branch.
        right_minus: Right eigenvector of the minus branch.
        left_plus: Left covector of the plus branch.
        left_minus: Left covector of the minus branch.
        gap: Δ_E with value_plus − value_minus = gap.
        point: Parameter point the system was computed at.
        normalization: ``"exact"`` or ``"literal"``.
    """

    value_plus: complex
    value_minus: complex
    right_plus: NDArray[np.complex128]
    right_minus: NDArray[np.complex128]
    left_plus: NDArray[np.complex128]
    left_minus: NDArray[np.complex128]
    gap: complex
    point: ParameterPoint | None = field(default=None)
    normalization: Normalization = "exact"

    @property
    def rights(self) -> NDArray[np.complex128]:
        """Right vectors as columns (plus, minus)."""
        return np.column_stack((self.right_plus, self.right_minus))

    @property
    def lefts(self) -> NDArray[np.complex128]:
        """Left covectors as rows (plus, minus)."""
        return np.vstack((self.left_plus, self.left_minus))

    @property
    def values(self) -> tuple[complex, complex]:
        """Energies as (plus, minus)."""
        return self.value_plus, self.value_minus

    def value(self, label: Label) -> complex:
        """Energy of the labelled branch."""
        return self.value_plus if label == "plus" else self.value_minus

    def right(self, label: Label) -> NDArray[np.complex128]:
        """Right vector of the labelled branch."""
        return self.right_plus if label == "plus" else self.right_minus

    def left(self, label: Label) -> NDArray[np.complex128]:
        """Left covector of the labelled branch."""
        return self.left_plus if label == "plus" else self.left_minus

    def swapped(self) -> Eigensystem:
        """Return the same eigensystem with the two labels exchanged."""
        return Eigensystem(
            value_plus=self.value_minus,
            value_minus=self.value_plus,
            right_plus=self.right_minus,
            right_minus=self.right_plus,
            left_plus=self.left_minus,
            left_minus=self.left_plus,
            gap=-self.gap,
            point=self.point,
            normalization=self.normalization,
        )

    def rephased(self, phase_plus: complex, phase_minus: complex) -> Eigensystem:
        """Multiply right vectors by unit phases and left covectors by their inverses."""
        return Eigensystem(
            value_plus=self.value_plus,
            value_minus=self.value_minus,
            right_plus=self.right_plus * phase_plus,
            right_minus=self.right_minus * phase_minus,
            left_plus=self.left_plus / phase_plus,
            left_minus=self.left_minus / phase_minus,
            gap=self.gap,
            point=self.point,
            normalization=self.normalization,
        )


def biorthonormal_vectors(
    energy: ArrayLike, h11: ArrayLike, h22: ArrayLike, g: ArrayLike
) -> NDArray[np.complex128]:
    """Return eigenvectors scaled so that vᵀv = 1, broadcasting over inputs.

    Of the two equivalent null vectors [E − H₂₂, g] and [g, E − H₁₁] the one
    with the larger norm is used, which keeps the construction well defined at
    g = 0.

    Returns:
        Array of shape ``(*shape, 2)``.
    """
    energy, h11, h22, g = np.broadcast_arrays(
        np.asarray(energy, dtype=complex),
        np.asarray(h11, dtype=complex),
        np.asarray(h22, dtype=complex),
        np.asarray(g, dtype=complex),
    )
    first = np.stack((energy - h22, g), axis=-1)
    second = np.stack((g, energy - h11), axis=-1)
    use_first = np.linalg.norm(first, axis=-1) >= np.linalg.norm(second, axis=-1)
    v = np.where(use_first[..., None], first, second)
    scale = np.sqrt(np.sum(v * v, axis=-1))
    with np.errstate(divide="ignore", invalid="ignore"):
        return v / scale[..., None]


def eigensystem(
    p: ParameterPoint,
    *,
    floor: float = DEGENERACY_FLOOR,
    normalization: Normalization = "exact",
) -> Eigensystem:
    """Return the eigensystem at *p* with raw closed-form labels.

    Labels follow the principal square root in Δ_E; path-dependent labelling
    is applied later by branch continuation.

    Args:
        p: Parameter point.
        floor: Degeneracy floor on |Δ_E| in units of ω_a.
        normalization: ``"exact"`` rescales so the left/right pairs are
            biorthonormal. ``"literal"`` uses [A±, 4g]/S± with
            S± = sqrt(|A±|² + 16g²) for both vector and covector.

    Raises:
        DegenerateEigensystemError: If |Δ_E| is below ``floor·ω_a``, or the
            literal normalization vanishes.
    """
    disc = discriminant(p.delta, p.g, p.gamma, p.kappa)
    gap = complex(gap_from_discriminant(disc))
    if abs(gap) < floor * p.omega_a:
        raise DegenerateEigensystemError(
            f"Eigenvalue gap {abs(gap):.3e} below degeneracy floor at {p}",
            gap=abs(gap),
            floor=floor * p.omega_a,
        )
    e_plus, e_minus = (complex(x) for x in eigenvalues_from_gap(gap, p.delta, p.gamma, p.kappa, p.omega_a))

    if normalization == "literal":
        d = p.delta - 0.5j * (p.gamma - p.kappa)
        vectors = []
        for sign in (1.0, -1.0):
            a = 2.0 * (d + sign * gap)
            s = math.sqrt(abs(a) ** 2 + 16.0 * p.g**2)
            if s == 0.0:
                raise DegenerateEigensystemError(
                    "Literal normalization vanishes at this point", gap=abs(gap), floor=0.0
                )
            vectors.append(np.array([a, 4.0 * p.g], dtype=complex) / s)
        plus, minus = vectors
        return Eigensystem(e_plus, e_minus, plus, minus, plus.copy(), minus.copy(), gap, p, "literal")

    h = build_hamiltonian(p)
    vectors = biorthonormal_vectors(np.array([e_plus, e_minus]), h[0, 0], h[1, 1], p.g)
    plus, minus = vectors[0], vectors[1]
    return Eigensystem(e_plus, e_minus, plus, minus, plus.copy(), minus.copy(), gap, p, "exact")


def biorthogonality_defect(es: Eigensystem) -> float:
    """Return max over n, m of |⟨left_n|right_m⟩ − δ_nm|."""
    overlap = es.lefts @ es.rights
    return float(np.max(np.abs(overlap - np.eye(2))))


def bell_overlaps(es: Eigensystem) -> tuple[float, float]:
    """Return |⟨Bell₊|r⟩|/‖r‖ for the plus and minus right vectors."""
    scores = []
    for vec in (es.right_plus, es.right_minus):
        scores.append(float(abs(np.vdot(_BELL_PLUS, vec)) / np.linalg.norm(vec)))
    return scores[0], scores[1]


def label_by_bell_overlap(es: Eigensystem) -> Eigensystem:
    """Label plus as the eigenvector with the larger overlap on (1, 1)/√2."""
    plus_score, minus_score = bell_overlaps(es)
    return es.swapped() if minus_score > plus_score else es
