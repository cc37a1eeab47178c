"""Tests for the Hamiltonian and its closed-form spectrum."""

from __future__ import annotations

import numpy as np
import pytest

from bell_switch.model import (
    ParameterPoint,
    build_hamiltonian,
    complete_parameters,
    discriminant,
    discriminant_magnitude,
    eigenvalue_gap,
    eigenvalues_from_gap,
    eigenvalues_on_grid,
    gap_from_discriminant,
)


def _random_points(n: int, seed: int = 0) -> list[ParameterPoint]:
    rng = np.random.default_rng(seed)
    draws = rng.uniform(-0.5, 0.5, size=(n, 4))
    return [
        ParameterPoint(delta=d, g=abs(g), gamma=abs(gm), kappa=k)
        for d, g, gm, k in draws
    ]


class TestBuildHamiltonian:
    """Tests for build_hamiltonian."""

    def test_entries(self) -> None:
        """Test the matrix layout in the (|e,0⟩, |g,1⟩) basis."""
        p = ParameterPoint(omega_a=1.0, delta=0.1, g=0.2, gamma=0.3, kappa=0.4)

        h = build_hamiltonian(p)

        assert h.shape == (2, 2)
        assert h[0, 0] == pytest.approx(1.1 - 0.15j)
        assert h[1, 1] == pytest.approx(1.0 - 0.2j)
        assert h[0, 1] == h[1, 0] == 0.2

    def test_complex_symmetric(self) -> None:
        """Test H equals its transpose, not its conjugate transpose."""
        h = build_hamiltonian(ParameterPoint(g=0.1, gamma=0.2, kappa=-0.2))

        np.testing.assert_array_equal(h, h.T)
        assert not np.allclose(h, h.conj().T)


class TestDiscriminant:
    """Tests for the discriminant and gap."""

    def test_matches_expanded_form(self) -> None:
        """Test agreement with (γ − κ + 2iδ)² − 16g²."""
        for p in _random_points(50):
            expected = (p.gamma - p.kappa + 2j * p.delta) ** 2 - 16 * p.g**2
            assert complex(discriminant(p.delta, p.g, p.gamma, p.kappa)) == pytest.approx(expected, abs=1e-14)

    def test_exact_zero_on_degeneracy_line(self) -> None:
        """Test the discriminant vanishes exactly at 4g = γ − κ, δ = 0."""
        assert complex(discriminant(0.0, 0.1, 0.2, -0.2)) == 0.0

    def test_gap_squared(self) -> None:
        """Test Δ_E² = −disc/4."""
        p = ParameterPoint(delta=0.05, g=0.1, gamma=0.1, kappa=-0.1)
        gap = eigenvalue_gap(p)

        assert gap**2 == pytest.approx(-complex(discriminant(p.delta, p.g, p.gamma, p.kappa)) / 4)
        assert discriminant_magnitude(p) == pytest.approx(abs(gap) ** 2)

    def test_hermitian_gap(self) -> None:
        """Test the lossless resonant gap is 2g."""
        p = ParameterPoint(g=0.1)

        assert abs(eigenvalue_gap(p)) == pytest.approx(0.2)


class TestEigenvalues:
    """Tests for the closed-form eigenvalues."""

    def test_match_numerical_eigensolver(self) -> None:
        """Test closed-form eigenvalues agree with a dense eigensolve."""
        checked = 0
        for p in _random_points(2000, seed=1):
            gap = eigenvalue_gap(p)
            if abs(gap) < 1e-6:
                continue
            plus, minus = eigenvalues_from_gap(gap, p.delta, p.gamma, p.kappa, p.omega_a)
            numeric = np.linalg.eigvals(build_hamiltonian(p))
            direct = abs(complex(plus) - numeric[0]) + abs(complex(minus) - numeric[1])
            crossed = abs(complex(plus) - numeric[1]) + abs(complex(minus) - numeric[0])
            assert min(direct, crossed) < 1e-10
            checked += 1
        assert checked > 1900

    def test_trace_and_determinant(self) -> None:
        """Test E₊ + E₋ = tr H and E₊E₋ = det H."""
        p = ParameterPoint(delta=0.03, g=0.12, gamma=0.2, kappa=-0.05)
        plus, minus = eigenvalues_from_gap(eigenvalue_gap(p), p.delta, p.gamma, p.kappa)
        h = build_hamiltonian(p)

        assert complex(plus + minus) == pytest.approx(np.trace(h))
        assert complex(plus * minus) == pytest.approx(np.linalg.det(h))

    def test_lossless_resonance(self) -> None:
        """Test E = ω_a ± g without loss or detuning."""
        p = ParameterPoint(g=0.1)
        values = eigenvalues_from_gap(eigenvalue_gap(p), p.delta, p.gamma, p.kappa)

        assert sorted(complex(v).real for v in values) == pytest.approx([0.9, 1.1])

    def test_grid_matches_scalar(self) -> None:
        """Test the vectorized kernel agrees with per-point evaluation."""
        values = complete_parameters(
            {"g": np.linspace(0.0, 0.3, 7), "gamma": 0.1, "delta": 0.02}, alpha=-1.0
        )
        plus, minus, gap, disc = eigenvalues_on_grid(values)

        for k, g in enumerate(values["g"]):
            p = ParameterPoint(g=float(g), gamma=0.1, kappa=-0.1, delta=0.02)
            assert complex(gap[k]) == pytest.approx(eigenvalue_gap(p))
            assert complex(gap_from_discriminant(disc[k])) == complex(gap[k])
        assert plus.shape == minus.shape == (7,)
