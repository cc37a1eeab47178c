"""Exception hierarchy for the simulator."""

from __future__ import annotations

from typing import Any, ClassVar


class SimulationError(Exception):
    """Base exception for all simulator errors.

    Every error raised by the package derives from this class, so callers can
    catch one type around a whole experiment run.

    Attributes:
        message: Human-readable error message.
        cause: Original exception that caused this error.
        details: Additional error context as key-value pairs.
        exit_code: Process exit code the command line maps this error to.

    Details can be accessed as attributes (e.g., error.gap).
    """

    exit_code: ClassVar[int] = 1

    # Map attribute names to default values when not in details
    _defaults: ClassVar[dict[str, Any]] = {}

    def __init__(self, message: str, *, cause: Exception | None = None, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.cause = cause
        self.details = details

    def __getattr__(self, name: str) -> Any:
        """Access details as attributes."""
        if name in ("details", "message", "cause"):
            raise AttributeError(name)
        if name in self.details:
            return self.details[name]
        if name in self._defaults:
            return self._defaults[name]
        raise AttributeError(f"'{type(self).__name__}' has no attribute '{name}'")

    def __reduce__(self) -> tuple[Any, ...]:
        # Keeps errors picklable across process-pool workers.
        return (_rebuild, (type(self), self.message, self.cause, self.details))

    def __str__(self) -> str:
        """Return string representation."""
        if self.cause:
            return f"{self.message} (caused by: {self.cause})"
        return self.message

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready summary for structured logs."""
        data: dict[str, Any] = {"type": type(self).__name__, "exit_code": self.exit_code, **self.details}
        if self.cause is not None:
            data["cause"] = repr(self.cause)
        return data


def _rebuild(
    cls: type[SimulationError],
    message: str,
    cause: Exception | None,
    details: dict[str, Any],
) -> SimulationError:
    error = cls.__new__(cls)
    SimulationError.__init__(error, message, cause=cause, **details)
    return error


class ConfigurationError(SimulationError):
    """Invalid experiment or settings configuration.

    Raised when a configuration file cannot be read, contains unknown keys,
    or misses values required by the selected loop kind.

    Attributes from details: config_key, source.
    """

    exit_code: ClassVar[int] = 2
    _defaults: ClassVar[dict[str, Any]] = {"config_key": None, "source": None}


class InvalidParameterError(SimulationError):
    """A parameter point violates its invariants (non-finite or ω_a ≤ 0).

    Attributes from details: field, value.
    """

    exit_code: ClassVar[int] = 2


class DegenerateEigensystemError(SimulationError):
    """The eigenvalue gap fell below the degeneracy floor.

    At an exceptional point the eigenvectors coalesce and become
    self-orthogonal, so no biorthogonal normalization exists.

    Attributes from details: gap, floor.
    """

    exit_code: ClassVar[int] = 4


class NoEPFoundError(SimulationError):
    """No exceptional point lies inside the search box.

    Attributes from details: best_point, best_discriminant.
    """


class NonConvergedError(SimulationError):
    """Every root-finder start exhausted its evaluation budget.

    Attributes from details: starts.
    """


class AmbiguousAssignmentError(SimulationError):
    """Both branch assignments score the same; the step is too coarse.

    Attributes from details: score_keep, score_swap.
    """

    exit_code: ClassVar[int] = 4


class InvalidLoopError(SimulationError):
    """A loop cannot be constructed from the given constants.

    Attributes from details: kind, reason.
    """

    exit_code: ClassVar[int] = 3


class ReferenceOnPathError(SimulationError):
    """The reference point lies on the projected loop; winding is undefined.

    Attributes from details: min_distance.
    """

    exit_code: ClassVar[int] = 3


class StepUnderflowError(SimulationError):
    """The adaptive integrator step shrank below the configured floor.

    Attributes from details: time, step.
    """

    exit_code: ClassVar[int] = 4


class EmptyLevelSetError(SimulationError):
    """The difference surface never changes sign on the grid.

    Attributes from details: kind.
    """


class PlaneMismatchError(SimulationError):
    """A loop varies a parameter that the grid holds fixed.

    Attributes from details: parameter, deviation.
    """

    exit_code: ClassVar[int] = 3


class MismatchedRecordsError(SimulationError):
    """Two evolution records cannot be compared.

    Attributes from details: reason.
    """

    exit_code: ClassVar[int] = 2
