"""Integrator configuration."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

Scheme = Literal["rk4", "adaptive"]
FidelityPolicy = Literal["paper", "population"]
Labeling = Literal["continued", "principal"]


class IntegratorConfig(BaseModel):
    """Configuration for time evolution along a loop.

    Attributes:
        scheme: Fixed-step ``"rk4"`` or ``"adaptive"`` embedded Runge-Kutta.
        steps_per_period: RK4 steps per traversal (rounded up to a multiple
            of ``samples``).
        method: scipy ``solve_ivp`` method for the adaptive scheme.
        rtol: Relative tolerance of the adaptive scheme.
        atol: Absolute tolerance of the adaptive scheme.
        min_step: Step floor of the adaptive scheme, in units of 1/ω_a.
        samples: Observation intervals per traversal.
        fidelity_policy: ``"paper"`` reports |⟨left|ψ⟩|² directly;
            ``"population"`` divides by their sum.
        normalization: ``"exact"`` biorthonormal pairs or ``"literal"``
            modulus-normalized vectors for comparison runs.
        labeling: ``"continued"`` labels by Bell overlap at t = 0 and by
            continuity afterwards; ``"principal"`` uses the closed-form labels
            at every sample.
        renormalize: Rescale the state when its norm leaves ``norm_bounds``.
        norm_bounds: Allowed interval of the running Euclidean norm.
        ambiguity_tolerance: Branch-assignment scores closer than this are
            treated as ambiguous.
        degeneracy_floor: Floor on |Δ_E| in units of ω_a.
    """

    model_config = ConfigDict(extra="forbid")

    scheme: Scheme = Field(default="rk4", description="Integration scheme")
    steps_per_period: int = Field(default=20_000, gt=0, description="RK4 steps per traversal")
    method: Literal["DOP853", "RK45"] = Field(default="DOP853", description="Adaptive method")
    rtol: float = Field(default=1e-10, gt=0, description="Adaptive relative tolerance")
    atol: float = Field(default=1e-12, gt=0, description="Adaptive absolute tolerance")
    min_step: float = Field(default=1e-12, gt=0, description="Adaptive step floor")
    samples: int = Field(default=1000, gt=0, description="Observation intervals per traversal")
    fidelity_policy: FidelityPolicy = Field(default="paper", description="Fidelity policy")
    normalization: Literal["exact", "literal"] = Field(
        default="exact", description="Eigenvector normalization"
    )
    labeling: Labeling = Field(default="continued", description="Branch labelling mode")
    renormalize: bool = Field(default=True, description="Rescale the state on norm excursions")
    norm_bounds: tuple[float, float] = Field(
        default=(1e-6, 1e6), description="Allowed running-norm interval"
    )
    ambiguity_tolerance: float = Field(
        default=1e-6, ge=0, description="Branch-assignment ambiguity tolerance"
    )
    degeneracy_floor: float = Field(default=1e-12, gt=0, description="Degeneracy floor on |gap|")

    @model_validator(mode="after")
    def _check_bounds(self) -> IntegratorConfig:
        low, high = self.norm_bounds
        if not 0 < low < 1 < high:
            raise ValueError("norm_bounds must satisfy 0 < low < 1 < high")
        return self

    @property
    def steps_per_sample(self) -> int:
        """RK4 steps between consecutive observation times."""
        return -(-self.steps_per_period // self.samples)
