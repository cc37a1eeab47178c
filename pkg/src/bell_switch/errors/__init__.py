"""Error hierarchy."""

from bell_switch.errors.exceptions import (
    AmbiguousAssignmentError,
    ConfigurationError,
    DegenerateEigensystemError,
    EmptyLevelSetError,
    InvalidLoopError,
    InvalidParameterError,
    MismatchedRecordsError,
    NoEPFoundError,
    NonConvergedError,
    PlaneMismatchError,
    ReferenceOnPathError,
    SimulationError,
    StepUnderflowError,
)

__all__ = [
    "AmbiguousAssignmentError",
    "ConfigurationError",
    "DegenerateEigensystemError",
    "EmptyLevelSetError",
    "InvalidLoopError",
    "InvalidParameterError",
    "MismatchedRecordsError",
    "NoEPFoundError",
    "NonConvergedError",
    "PlaneMismatchError",
    "ReferenceOnPathError",
    "SimulationError",
    "StepUnderflowError",
]
