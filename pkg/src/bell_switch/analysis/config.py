"""Analysis configuration."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator


class AnalysisConfig(BaseModel):
    """Configuration for transfer classification and loop diagnostics.

    Attributes:
        threshold: Endpoint fidelity required to call a map identity or swap.
        stability_thresholds: Thresholds over which the class is recomputed
            to report verdict stability.
        adiabaticity_samples: Samples per traversal for adiabaticity metrics.
        fidelity_slack: Allowed excess of biorthogonal fidelities above 1.
    """

    model_config = ConfigDict(extra="forbid")

    threshold: float = Field(default=0.99, gt=0.5, le=1.0, description="Classification threshold")
    stability_thresholds: list[float] = Field(
        default_factory=lambda: [0.9, 0.95, 0.99],
        description="Thresholds for the stability report",
    )
    adiabaticity_samples: int = Field(default=1024, ge=16, description="Samples for metrics")
    fidelity_slack: float = Field(default=1e-6, ge=0, description="Fidelity excess allowed above 1")

    @field_validator("stability_thresholds")
    @classmethod
    def _check_thresholds(cls, values: list[float]) -> list[float]:
        for value in values:
            if not 0.5 < value <= 1.0:
                raise ValueError(f"stability threshold {value} is outside (0.5, 1]")
        return sorted(values)
