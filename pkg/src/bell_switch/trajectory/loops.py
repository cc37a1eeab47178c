"""Closed periodic parameter loops."""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, fields, replace
from enum import StrEnum
from functools import cached_property
from typing import Any, Self

import numpy as np
from numpy.typing import ArrayLike, NDArray

from bell_switch.errors import InvalidLoopError
from bell_switch.model.hamiltonian import hamiltonian_stack
from bell_switch.model.parameters import PARAMETER_NAMES, ParameterPoint, complete_parameters

logger = logging.getLogger(__name__)

#: Samples per closure period used for the symmetric-loop premise check.
PREMISE_SAMPLES = 2048


class Direction(StrEnum):
    """Traversal direction; counter-clockwise corresponds to ω > 0."""

    CW = "cw"
    CCW = "ccw"

    @property
    def opposite(self) -> Direction:
        """The other direction."""
        return Direction.CCW if self is Direction.CW else Direction.CW


class LoopKind(StrEnum):
    """Built-in loop families."""

    SYMMETRIC = "symmetric"
    CHIRAL_MODULATED = "chiral_modulated"
    CONSTANT_DISSIPATION = "constant_dissipation"
    CUSTOM = "custom"


class Loop(ABC):
    """A periodic path through parameter space.

    Subclasses provide the time dependence of (δ, g, γ) and optionally κ; the
    base class assembles complete parameter arrays and Hamiltonians from it.
    """

    kind: LoopKind
    omega_a: float
    alpha: float | None

    @property
    @abstractmethod
    def period(self) -> float:
        """Duration of one traversal, the evolution interval."""

    @property
    def closure_period(self) -> float:
        """Period of the defining formulas; evaluate(closure_period) = evaluate(0)."""
        return self.period

    @property
    @abstractmethod
    def direction(self) -> Direction:
        """Traversal direction."""

    @abstractmethod
    def _components(self, t: NDArray[np.float64]) -> dict[str, NDArray[np.float64]]:
        """Return the time-dependent parameters at times *t*."""

    @abstractmethod
    def reversed(self) -> Self:
        """Return the same path traversed in the opposite direction."""

    @property
    @abstractmethod
    def constants(self) -> dict[str, Any]:
        """Defining constants, in a stable order, for reports and provenance."""

    def shape_key(self) -> tuple[Any, ...]:
        """Constants that identify the path independently of its direction."""
        return (self.kind, tuple(sorted((k, _unsigned(k, v)) for k, v in self.constants.items())))

    @property
    def loop_id(self) -> str:
        """Readable provenance string."""
        body = ",".join(f"{k}={v:.17g}" if isinstance(v, float) else f"{k}={v}" for k, v in self.constants.items())
        return f"{self.kind}({body})"

    def sample(self, times: ArrayLike) -> dict[str, NDArray[np.float64]]:
        """Return complete parameter arrays at *times*."""
        t = np.asarray(times, dtype=float)
        values: dict[str, Any] = {"omega_a": self.omega_a}
        values.update(self._components(t))
        if "kappa" in values:
            return complete_parameters(values)
        return complete_parameters(values, alpha=self.alpha)

    def evaluate(self, t: float) -> ParameterPoint:
        """Return the parameter point at time *t* (periodic extension for any t)."""
        values = self.sample(t)
        return ParameterPoint(**{name: float(values[name]) for name in PARAMETER_NAMES})

    def hamiltonians(self, times: ArrayLike) -> NDArray[np.complex128]:
        """Return Hamiltonians at *times*, shape ``(len(times), 2, 2)``."""
        p = self.sample(times)
        return hamiltonian_stack(p["delta"], p["g"], p["gamma"], p["kappa"], p["omega_a"])


def _unsigned(name: str, value: Any) -> Any:
    if name == "omega" and isinstance(value, float):
        return abs(value)
    if name == "direction":
        return None
    return value


def _validate_omega(kind: LoopKind, omega: float) -> None:
    if omega == 0 or not math.isfinite(omega):
        raise InvalidLoopError(
            f"{kind} loop needs a finite nonzero angular frequency, got {omega!r}",
            kind=str(kind),
            reason="omega",
        )


@dataclass(frozen=True, kw_only=True)
class _AnalyticLoop(Loop):
    """Loop defined by closed-form expressions in ωt."""

    omega: float
    alpha: float | None = -1.0
    omega_a: float = 1.0

    def __post_init__(self) -> None:
        _validate_omega(self.kind, self.omega)
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, float) and not math.isfinite(value):
                raise InvalidLoopError(
                    f"Loop constant {f.name} must be finite", kind=str(self.kind), reason=f.name
                )

    @property
    def period(self) -> float:
        return 2.0 * math.pi / abs(self.omega)

    @property
    def direction(self) -> Direction:
        return Direction.CCW if self.omega > 0 else Direction.CW

    def reversed(self) -> Self:
        return replace(self, omega=-self.omega)

    @property
    def constants(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.init}


@dataclass(frozen=True, kw_only=True)
class SymmetricLoop(_AnalyticLoop):
    """g = g₀ + G₀cos ωt, γ = Γ₀sin² ωt, δ = 0, κ = αγ.

    One traversal lasts π/|ω|; the formulas repeat after 2π/|ω|.
    """

    kind: LoopKind = field(default=LoopKind.SYMMETRIC, init=False)
    g0: float
    G0: float
    Gamma0: float

    @property
    def period(self) -> float:
        return math.pi / abs(self.omega)

    @property
    def closure_period(self) -> float:
        return 2.0 * math.pi / abs(self.omega)

    def _components(self, t: NDArray[np.float64]) -> dict[str, NDArray[np.float64]]:
        phase = self.omega * t
        return {
            "delta": np.zeros_like(phase),
            "g": self.g0 + self.G0 * np.cos(phase),
            "gamma": self.Gamma0 * np.sin(phase) ** 2,
        }

    @cached_property
    def premise_violated(self) -> bool:
        """True when 16g² > (γ − κ)² fails somewhere on the loop."""
        times = np.linspace(0.0, self.closure_period, PREMISE_SAMPLES + 1)
        p = self.sample(times)
        return bool(np.any(16.0 * p["g"] ** 2 <= (p["gamma"] - p["kappa"]) ** 2))


@dataclass(frozen=True, kw_only=True)
class ChiralModulatedLoop(_AnalyticLoop):
    """δ = Δ₀sin ωt, γ = Γ₀sin²(ωt/2), g = g₀, κ = αγ."""

    kind: LoopKind = field(default=LoopKind.CHIRAL_MODULATED, init=False)
    g0: float
    Delta0: float
    Gamma0: float

    def _components(self, t: NDArray[np.float64]) -> dict[str, NDArray[np.float64]]:
        phase = self.omega * t
        return {
            "delta": self.Delta0 * np.sin(phase),
            "g": np.full_like(phase, self.g0),
            "gamma": self.Gamma0 * np.sin(phase / 2.0) ** 2,
        }


@dataclass(frozen=True, kw_only=True)
class ConstantDissipationLoop(_AnalyticLoop):
    """γ = γ₀, g = g₀ + G₀cos ωt, δ = Δ₀sin ωt, κ = αγ₀."""

    kind: LoopKind = field(default=LoopKind.CONSTANT_DISSIPATION, init=False)
    g0: float
    G0: float
    Delta0: float
    gamma0: float

    def _components(self, t: NDArray[np.float64]) -> dict[str, NDArray[np.float64]]:
        phase = self.omega * t
        return {
            "delta": self.Delta0 * np.sin(phase),
            "g": self.g0 + self.G0 * np.cos(phase),
            "gamma": np.full_like(phase, self.gamma0),
        }


def make_symmetric_loop(
    g0: float, G0: float, Gamma0: float, alpha: float | None, omega: float, *, omega_a: float = 1.0
) -> SymmetricLoop:
    """Build the direction-independent loop used for symmetric transfer.

    Raises:
        InvalidLoopError: If ω is zero or not finite.
    """
    loop = SymmetricLoop(g0=g0, G0=G0, Gamma0=Gamma0, alpha=alpha, omega=omega, omega_a=omega_a)
    if loop.premise_violated:
        logger.warning(
            "Symmetric loop violates 16g^2 > (gamma - kappa)^2; the gap turns complex on part of the path",
        )
    return loop


def make_chiral_modulated_loop(
    g0: float, Delta0: float, Gamma0: float, alpha: float | None, omega: float, *, omega_a: float = 1.0
) -> ChiralModulatedLoop:
    """Build the loop with time-modulated dissipation and detuning.

    Raises:
        InvalidLoopError: If ω is zero or not finite.
    """
    return ChiralModulatedLoop(
        g0=g0, Delta0=Delta0, Gamma0=Gamma0, alpha=alpha, omega=omega, omega_a=omega_a
    )


def make_constant_dissipation_loop(
    g0: float,
    G0: float,
    Delta0: float,
    gamma0: float,
    alpha: float | None,
    omega: float,
    *,
    omega_a: float = 1.0,
) -> ConstantDissipationLoop:
    """Build the loop with constant dissipation and modulated coupling and detuning.

    Raises:
        InvalidLoopError: If ω is zero or not finite.
    """
    return ConstantDissipationLoop(
        g0=g0, G0=G0, Delta0=Delta0, gamma0=gamma0, alpha=alpha, omega=omega, omega_a=omega_a
    )


def evaluate(loop: Loop, t: float) -> ParameterPoint:
    """Return the parameter point of *loop* at time *t*."""
    return loop.evaluate(t)
