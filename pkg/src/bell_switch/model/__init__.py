"""Single-excitation non-Hermitian Jaynes-Cummings model."""

from bell_switch.model.eigensystem import (
    DEGENERACY_FLOOR,
    Eigensystem,
    Label,
    Normalization,
    biorthogonality_defect,
    biorthonormal_vectors,
    eigensystem,
    label_by_bell_overlap,
)
from bell_switch.model.exceptional import (
    EP_TOLERANCE,
    Box,
    bell_endpoint_check,
    find_ep,
    minimize_discriminant,
)
from bell_switch.model.hamiltonian import (
    HamiltonianMatrix,
    build_hamiltonian,
    discriminant,
    discriminant_magnitude,
    eigenvalue_gap,
    eigenvalues_from_gap,
    eigenvalues_on_grid,
    gap_from_discriminant,
    hamiltonian_stack,
)
from bell_switch.model.parameters import (
    PARAMETER_NAMES,
    ParameterName,
    ParameterPoint,
    complete_parameters,
)

__all__ = [
    "DEGENERACY_FLOOR",
    "EP_TOLERANCE",
    "PARAMETER_NAMES",
    "Box",
    "Eigensystem",
    "HamiltonianMatrix",
    "Label",
    "Normalization",
    "ParameterName",
    "ParameterPoint",
    "bell_endpoint_check",
    "biorthogonality_defect",
    "biorthonormal_vectors",
    "build_hamiltonian",
    "complete_parameters",
    "discriminant",
    "discriminant_magnitude",
    "eigensystem",
    "eigenvalue_gap",
    "eigenvalues_from_gap",
    "eigenvalues_on_grid",
    "find_ep",
    "gap_from_discriminant",
    "hamiltonian_stack",
    "label_by_bell_overlap",
    "minimize_discriminant",
]
