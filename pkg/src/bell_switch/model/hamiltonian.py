"""Effective Hamiltonian, discriminant and closed-form eigenvalues.

The kernels here broadcast over numpy arrays so that single points, loop
samples and whole parameter grids share one implementation.
"""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np
from numpy.typing import ArrayLike, NDArray

from bell_switch.model.parameters import ParameterPoint

#: 2×2 complex matrix in the ordered basis (|e,0⟩, |g,1⟩).
HamiltonianMatrix = NDArray[np.complex128]


def hamiltonian_stack(
    delta: ArrayLike,
    g: ArrayLike,
    gamma: ArrayLike,
    kappa: ArrayLike,
    omega_a: ArrayLike = 1.0,
) -> NDArray[np.complex128]:
    """Assemble Hamiltonians for broadcast parameter arrays.

    Returns:
        Array of shape ``(*shape, 2, 2)``.
    """
    delta, g, gamma, kappa, omega_a = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (delta, g, gamma, kappa, omega_a))
    )
    h = np.empty((*delta.shape, 2, 2), dtype=complex)
    h[..., 0, 0] = (omega_a + delta) - 0.5j * gamma
    h[..., 0, 1] = g
    h[..., 1, 0] = g
    h[..., 1, 1] = omega_a - 0.5j * kappa
    return h


def build_hamiltonian(p: ParameterPoint) -> HamiltonianMatrix:
    """Return the single-excitation Hamiltonian at *p*.

    Diagonal entries are ω_a + δ − iγ/2 and ω_a − iκ/2; both off-diagonal
    entries equal g.
    """
    return hamiltonian_stack(p.delta, p.g, p.gamma, p.kappa, p.omega_a)


def discriminant(
    delta: ArrayLike, g: ArrayLike, gamma: ArrayLike, kappa: ArrayLike
) -> NDArray[np.complex128]:
    """Evaluate (γ − κ + 2iδ)² − 16g².

    The real part is formed as (u − 4g)(u + 4g) − 4δ² with u = γ − κ, which
    is exactly zero on the analytic degeneracy lines whenever u and 4g are
    representable. A signed zero in the imaginary part is folded to +0 so
    the principal square root stays on the upper half-plane.
    """
    delta, g, gamma, kappa = (np.asarray(x, dtype=float) for x in (delta, g, gamma, kappa))
    u = gamma - kappa
    real = (u - 4.0 * g) * (u + 4.0 * g) - 4.0 * delta * delta
    imag = 4.0 * u * delta + 0.0
    out = np.empty(real.shape, dtype=complex)
    out.real = real
    out.imag = imag
    return out


def gap_from_discriminant(disc: ArrayLike) -> NDArray[np.complex128]:
    """Return Δ_E = (i/2)·sqrt(disc) on the principal branch."""
    return 0.5j * np.sqrt(np.asarray(disc, dtype=complex))


def eigenvalues_from_gap(
    gap: ArrayLike,
    delta: ArrayLike,
    gamma: ArrayLike,
    kappa: ArrayLike,
    omega_a: ArrayLike = 1.0,
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """Return (E₊, E₋) = (2(2ω_a + δ) − i(γ + κ) ± 2Δ_E)/4."""
    gap = np.asarray(gap, dtype=complex)
    centre = (2.0 * (2.0 * np.asarray(omega_a) + np.asarray(delta)) - 1j * (np.asarray(gamma) + np.asarray(kappa))) / 4.0
    return centre + gap / 2.0, centre - gap / 2.0


def eigenvalue_gap(p: ParameterPoint) -> complex:
    """Return the complex gap Δ_E at *p* (principal square root)."""
    return complex(gap_from_discriminant(discriminant(p.delta, p.g, p.gamma, p.kappa)))


def discriminant_magnitude(p: ParameterPoint) -> float:
    """Return |Δ_E²| = |disc|/4, the smooth degeneracy measure used for EP tests."""
    return float(abs(discriminant(p.delta, p.g, p.gamma, p.kappa)) / 4.0)


def eigenvalues_on_grid(
    values: Mapping[str, ArrayLike],
) -> tuple[NDArray[np.complex128], NDArray[np.complex128], NDArray[np.complex128], NDArray[np.complex128]]:
    """Closed-form spectrum for complete parameter arrays.

    Args:
        values: Arrays for every parameter, as returned by
            :func:`~bell_switch.model.parameters.complete_parameters`.

    Returns:
        (E₊, E₋, Δ_E, disc) with principal-branch labels.
    """
    disc = discriminant(values["delta"], values["g"], values["gamma"], values["kappa"])
    gap = gap_from_discriminant(disc)
    plus, minus = eigenvalues_from_gap(
        gap, values["delta"], values["gamma"], values["kappa"], values["omega_a"]
    )
    return plus, minus, gap, disc
