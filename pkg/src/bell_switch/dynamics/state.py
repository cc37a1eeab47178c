"""State vectors in the (|e,0⟩, |g,1⟩) basis."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from bell_switch.errors import InvalidParameterError


@dataclass(frozen=True, slots=True)
class StateVector:
    """Complex amplitudes on |e,0⟩ and |g,1⟩.

    Attributes:
        amp_e0: Amplitude of the excited atom with an empty cavity.
        amp_g1: Amplitude of the ground-state atom with one photon.
    """

    amp_e0: complex
    amp_g1: complex

    def __post_init__(self) -> None:
        if not (cmath.isfinite(self.amp_e0) and cmath.isfinite(self.amp_g1)):
            raise InvalidParameterError("State amplitudes must be finite", field="state")
        if self.amp_e0 == 0 and self.amp_g1 == 0:
            raise InvalidParameterError("State vector must not vanish", field="state")

    @classmethod
    def from_array(cls, values: ArrayLike) -> StateVector:
        """Build a state from a length-2 array."""
        a, b = np.asarray(values, dtype=complex).reshape(2)
        return cls(complex(a), complex(b))

    def as_array(self) -> NDArray[np.complex128]:
        """Return the amplitudes as a numpy vector."""
        return np.array([self.amp_e0, self.amp_g1], dtype=complex)

    @property
    def norm(self) -> float:
        """Euclidean norm."""
        return math.hypot(abs(self.amp_e0), abs(self.amp_g1))

    def normalized(self) -> StateVector:
        """Return the unit-norm state."""
        n = self.norm
        return StateVector(self.amp_e0 / n, self.amp_g1 / n)

    def scaled(self, factor: complex) -> StateVector:
        """Return the state multiplied by a complex factor."""
        return StateVector(self.amp_e0 * factor, self.amp_g1 * factor)


def initial_bell_state(sign: Literal["plus", "minus"]) -> StateVector:
    """Return (|e,0⟩ ± |g,1⟩)/√2."""
    if sign not in ("plus", "minus"):
        raise ValueError(f"Bell state sign must be 'plus' or 'minus', got {sign!r}")
    amp = 1.0 / math.sqrt(2.0)
    return StateVector(complex(amp), complex(amp if sign == "plus" else -amp))
