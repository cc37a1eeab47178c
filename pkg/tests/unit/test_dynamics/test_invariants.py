"""Structural properties of evolution along the three analytic loops."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest
from numpy.typing import NDArray

from bell_switch.dynamics import EvolutionRecord, IntegratorConfig, StateVector, evolve, initial_eigenstate
from bell_switch.trajectory import Direction, Loop
from tests.fixtures.loops import chiral_loop, constant_loop, symmetric_loop

LOOPS: dict[str, Callable[[Direction], Loop]] = {
    "symmetric": symmetric_loop,
    "chiral": chiral_loop,
    "constant": constant_loop,
}


def _raw_final(record: EvolutionRecord) -> NDArray[np.complex128]:
    return record.states[-1] * np.exp(record.log_norm[-1])


def _propagator(loop: Loop, cfg: IntegratorConfig) -> NDArray[np.complex128]:
    columns = [_raw_final(evolve(loop, StateVector(*basis), cfg)) for basis in ((1.0, 0.0), (0.0, 1.0))]
    return np.column_stack(columns)


class TestLinearity:
    """Tests that evolution is linear in the initial state."""

    def test_superposition(self) -> None:
        """Test evolving a·ψ₁ + b·ψ₂ gives a·U ψ₁ + b·U ψ₂ once the log-norm is restored."""
        loop = chiral_loop(Direction.CCW)
        cfg = IntegratorConfig(steps_per_period=2000, samples=20, renormalize=False)
        a, b = 0.6 - 0.2j, -0.3 + 0.9j

        first = _raw_final(evolve(loop, StateVector(1.0, 0.0), cfg))
        second = _raw_final(evolve(loop, StateVector(0.2j, 1.0), cfg))
        combined = _raw_final(evolve(loop, StateVector(a + b * 0.2j, b), cfg))

        np.testing.assert_allclose(combined, a * first + b * second, atol=1e-8)

    def test_rescaling_keeps_raw_state(self) -> None:
        """Test norm rescaling changes nothing once the log-norm is restored."""
        loop = constant_loop(Direction.CCW)
        tight = IntegratorConfig(steps_per_period=2000, samples=20, norm_bounds=(0.999, 1.001))
        off = tight.model_copy(update={"renormalize": False})
        psi0 = initial_eigenstate(loop, "plus", tight)

        np.testing.assert_allclose(
            _raw_final(evolve(loop, psi0, tight)), _raw_final(evolve(loop, psi0, off)), rtol=1e-10
        )


class TestScaleInvariance:
    """Tests that the initial normalization and phase do not matter."""

    def test_fidelities_unchanged(self) -> None:
        """Test a complex multiple of ψ₀ gives the same fidelity series."""
        loop = chiral_loop(Direction.CW)
        cfg = IntegratorConfig(steps_per_period=2000, samples=40)
        psi0 = initial_eigenstate(loop, "plus", cfg)
        factor = 2.5 - 1.5j

        a = evolve(loop, psi0, cfg)
        b = evolve(loop, psi0.scaled(factor), cfg)

        np.testing.assert_allclose(b.fidelity_plus, a.fidelity_plus, rtol=1e-10, atol=1e-14)
        np.testing.assert_allclose(b.fidelity_minus, a.fidelity_minus, rtol=1e-10, atol=1e-14)
        np.testing.assert_allclose(b.log_norm - a.log_norm, np.log(abs(factor)), atol=1e-10)
        assert b.final_fidelity_plus == pytest.approx(a.final_fidelity_plus, rel=1e-10)


class TestReversal:
    """Tests relating the two traversal directions."""

    def test_reversed_loop_is_opposite_direction(self) -> None:
        """Test Loop.reversed() evolves exactly like the loop built with -ω."""
        cfg = IntegratorConfig(steps_per_period=2000, samples=20)
        loop = chiral_loop(Direction.CCW)
        psi0 = initial_eigenstate(loop, "plus", cfg)

        a = evolve(loop.reversed(), psi0, cfg)
        b = evolve(chiral_loop(Direction.CW), psi0, cfg)

        assert a.direction is Direction.CW
        np.testing.assert_array_equal(a.states, b.states)
        np.testing.assert_array_equal(a.log_norm, b.log_norm)

    @pytest.mark.parametrize("name", ["chiral", "constant"])
    def test_reciprocity(self, name: str) -> None:
        """Test the clockwise propagator is the transpose of the counter-clockwise one.

        The Hamiltonian is complex symmetric and the clockwise path retraces
        the counter-clockwise one backwards in time.
        """
        cfg = IntegratorConfig(steps_per_period=8000, samples=10)
        make = LOOPS[name]

        forward = _propagator(make(Direction.CCW), cfg)
        backward = _propagator(make(Direction.CW), cfg)

        scale = np.max(np.abs(forward))
        np.testing.assert_allclose(backward / scale, forward.T / scale, atol=1e-8)

    def test_round_trip_is_not_identity(self) -> None:
        """Test going round and back does not undo the evolution of a lossy loop."""
        cfg = IntegratorConfig(steps_per_period=8000, samples=10)

        forward = _propagator(constant_loop(Direction.CCW), cfg)
        backward = _propagator(constant_loop(Direction.CW), cfg)
        round_trip = backward @ forward
        round_trip = round_trip / round_trip[0, 0]

        assert not np.allclose(round_trip, np.eye(2), atol=1e-3)


class TestBranchContinuity:
    """Tests that continued energies have no label jumps."""

    @pytest.mark.parametrize("name", sorted(LOOPS))
    @pytest.mark.parametrize("direction", list(Direction))
    def test_energies_move_smoothly(self, name: str, direction: Direction) -> None:
        """Test each labelled energy moves far less per sample than the gap it would jump."""
        loop = LOOPS[name](direction)
        cfg = IntegratorConfig(steps_per_period=2000, samples=1000)

        record = evolve(loop, initial_eigenstate(loop, "plus", cfg), cfg)

        for energies in (record.energies_plus, record.energies_minus):
            assert np.max(np.abs(np.diff(energies))) < 0.05


class TestConvergence:
    """Tests that the default schemes are converged on every analytic loop."""

    @pytest.mark.parametrize("name", ["symmetric", "constant"])
    def test_step_halving(self, name: str) -> None:
        """Test doubling the RK4 step count moves endpoint fidelities by less than 1e-6."""
        loop = LOOPS[name](Direction.CCW)
        coarse = IntegratorConfig(steps_per_period=4000, samples=100)
        fine = IntegratorConfig(steps_per_period=8000, samples=100)
        psi0 = initial_eigenstate(loop, "plus", coarse)

        a = evolve(loop, psi0, coarse)
        b = evolve(loop, psi0, fine)

        assert abs(a.final_fidelity_plus - b.final_fidelity_plus) < 1e-6
        assert abs(a.final_fidelity_minus - b.final_fidelity_minus) < 1e-6

    @pytest.mark.parametrize("name", ["symmetric", "constant"])
    def test_adaptive_agrees_with_rk4(self, name: str) -> None:
        """Test the adaptive scheme reaches the RK4 endpoint."""
        loop = LOOPS[name](Direction.CW)
        rk4 = IntegratorConfig(steps_per_period=8000, samples=100)
        adaptive = IntegratorConfig(scheme="adaptive", samples=100)
        psi0 = initial_eigenstate(loop, "plus", rk4)

        a = evolve(loop, psi0, rk4)
        b = evolve(loop, psi0, adaptive)

        assert b.final_fidelity_plus == pytest.approx(a.final_fidelity_plus, abs=1e-6)
        assert b.final_fidelity_minus == pytest.approx(a.final_fidelity_minus, abs=1e-6)
        np.testing.assert_allclose(b.log_norm[-1], a.log_norm[-1], atol=1e-6)
