"""Model parameters of the single-excitation Jaynes-Cummings Hamiltonian."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import asdict, dataclass, replace
from typing import Literal, get_args

import numpy as np
from numpy.typing import ArrayLike, NDArray

from bell_switch.errors import InvalidParameterError

ParameterName = Literal["omega_a", "delta", "g", "gamma", "kappa"]

#: Parameter names in storage order.
PARAMETER_NAMES: tuple[ParameterName, ...] = get_args(ParameterName)

_DEFAULTS: dict[str, float] = {"omega_a": 1.0, "delta": 0.0, "g": 0.0, "gamma": 0.0, "kappa": 0.0}


@dataclass(frozen=True, slots=True)
class ParameterPoint:
    """The five real model parameters at one instant, in units of ω_a.

    Attributes:
        omega_a: Atomic frequency, the normalization unit (must be positive).
        delta: Atom-cavity detuning.
        g: Atom-cavity coupling.
        gamma: Atomic decay rate.
        kappa: Cavity decay rate. Negative values describe gain.
    """

    omega_a: float = 1.0
    delta: float = 0.0
    g: float = 0.0
    gamma: float = 0.0
    kappa: float = 0.0

    def __post_init__(self) -> None:
        for name in PARAMETER_NAMES:
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameterError(
                    f"Parameter {name} must be finite, got {value!r}", field=name, value=value
                )
        if self.omega_a <= 0:
            raise InvalidParameterError(
                f"omega_a must be positive, got {self.omega_a!r}",
                field="omega_a",
                value=self.omega_a,
            )

    @classmethod
    def from_mapping(
        cls, values: Mapping[str, float], *, alpha: float | None = None
    ) -> ParameterPoint:
        """Build a point from a partial mapping, tying κ to αγ when requested.

        Args:
            values: Parameter values by name; missing names take their defaults.
            alpha: Ratio κ/γ. When given, κ is derived from γ and must not
                appear in *values*.

        Returns:
            The completed parameter point.
        """
        completed = complete_parameters(values, alpha=alpha)
        return cls(**{name: float(completed[name]) for name in PARAMETER_NAMES})

    def with_values(self, **changes: float) -> ParameterPoint:
        """Return a copy with some parameters replaced."""
        return replace(self, **changes)

    def as_dict(self) -> dict[str, float]:
        """Return the parameters as an ordered dictionary."""
        return asdict(self)

    @property
    def alpha(self) -> float | None:
        """The ratio κ/γ, or None when γ is zero."""
        return self.kappa / self.gamma if self.gamma else None


def complete_parameters(
    values: Mapping[str, ArrayLike], *, alpha: float | None = None
) -> dict[str, NDArray[np.float64]]:
    """Fill in missing parameters and apply the κ = αγ tie.

    Works on scalars and on arrays of any broadcastable shape, so the same
    routine assembles single points, grids and loop samples.

    Args:
        values: Known parameter values by name.
        alpha: Ratio κ/γ applied when given.

    Returns:
        Arrays for every parameter, broadcast against each other.

    Raises:
        ValueError: On unknown names, or when κ is given together with α.
    """
    unknown = set(values) - set(PARAMETER_NAMES)
    if unknown:
        valid = ", ".join(PARAMETER_NAMES)
        raise ValueError(f"Unknown parameter(s): {', '.join(sorted(unknown))}. Valid: {valid}")
    if alpha is not None and "kappa" in values:
        raise ValueError("kappa cannot be set explicitly when alpha ties it to gamma")

    merged = {name: np.asarray(values.get(name, _DEFAULTS[name]), dtype=float) for name in PARAMETER_NAMES}
    if alpha is not None:
        merged["kappa"] = alpha * merged["gamma"]
    arrays = np.broadcast_arrays(*(merged[name] for name in PARAMETER_NAMES))
    return dict(zip(PARAMETER_NAMES, arrays, strict=True))
