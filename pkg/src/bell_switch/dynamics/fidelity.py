"""Biorthogonal fidelities."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from bell_switch.dynamics.config import FidelityPolicy
from bell_switch.dynamics.state import StateVector
from bell_switch.model.eigensystem import Eigensystem


def fidelity(
    state: StateVector | ArrayLike,
    es: Eigensystem,
    policy: FidelityPolicy = "paper",
) -> tuple[float, float]:
    """Return (f_plus, f_minus) with f_m = |⟨left_m|ψ/‖ψ‖⟩|².

    Under ``"population"`` both values are divided by their sum.
    """
    psi = state.as_array() if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    f_plus = float(abs(es.left_plus @ psi) ** 2)
    f_minus = float(abs(es.left_minus @ psi) ** 2)
    if policy == "population":
        total = f_plus + f_minus
        return f_plus / total, f_minus / total
    return f_plus, f_minus
