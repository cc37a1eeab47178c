"""Tests for state vectors and fidelities."""

from __future__ import annotations

import math

import numpy as np
import pytest

from bell_switch.dynamics import StateVector, fidelity, initial_bell_state
from bell_switch.errors import InvalidParameterError
from bell_switch.model import ParameterPoint, eigensystem, label_by_bell_overlap


class TestStateVector:
    """Tests for StateVector."""

    def test_from_array(self) -> None:
        """Test construction from a numpy vector."""
        state = StateVector.from_array([3.0, 4.0j])

        assert state.amp_e0 == 3.0
        assert state.amp_g1 == 4.0j
        assert state.norm == pytest.approx(5.0)
        np.testing.assert_array_equal(state.as_array(), [3.0, 4.0j])

    def test_normalized(self) -> None:
        """Test normalization yields unit norm."""
        assert StateVector(3.0, 4.0).normalized().norm == pytest.approx(1.0)

    def test_scaled(self) -> None:
        """Test complex rescaling."""
        state = StateVector(1.0, 1.0j).scaled(2j)

        assert state.amp_e0 == 2j
        assert state.amp_g1 == -2.0

    def test_zero_vector(self) -> None:
        """Test the null vector is not a state."""
        with pytest.raises(InvalidParameterError, match="vanish"):
            StateVector(0.0, 0.0)

    def test_non_finite(self) -> None:
        """Test NaN amplitudes are rejected."""
        with pytest.raises(InvalidParameterError, match="finite"):
            StateVector(complex(math.nan, 0.0), 1.0)


class TestInitialBellState:
    """Tests for initial_bell_state."""

    @pytest.mark.parametrize(("sign", "second"), [("plus", 1.0), ("minus", -1.0)])
    def test_amplitudes(self, sign: str, second: float) -> None:
        """Test (|e,0⟩ ± |g,1⟩)/√2."""
        state = initial_bell_state(sign)  # type: ignore[arg-type]

        assert state.amp_e0 == pytest.approx(1 / math.sqrt(2))
        assert state.amp_g1 == pytest.approx(second / math.sqrt(2))
        assert state.norm == pytest.approx(1.0)

    def test_invalid_sign(self) -> None:
        """Test unknown signs are rejected."""
        with pytest.raises(ValueError, match="plus"):
            initial_bell_state("both")  # type: ignore[arg-type]


class TestFidelity:
    """Tests for biorthogonal fidelities."""

    def test_bell_state_on_hermitian_point(self) -> None:
        """Test the symmetric Bell state is the plus eigenvector."""
        es = label_by_bell_overlap(eigensystem(ParameterPoint(g=0.1)))

        f_plus, f_minus = fidelity(initial_bell_state("plus"), es)

        assert f_plus == pytest.approx(1.0)
        assert f_minus == pytest.approx(0.0, abs=1e-15)

    def test_scale_invariant(self) -> None:
        """Test fidelities ignore the norm of the state."""
        es = eigensystem(ParameterPoint(delta=0.02, g=0.1, gamma=0.1, kappa=-0.1))

        a = fidelity(np.array([1.0, 0.3j]), es)
        b = fidelity(np.array([10.0, 3.0j]), es)

        assert a == pytest.approx(b)

    def test_population_policy_sums_to_one(self) -> None:
        """Test the population policy normalizes the pair."""
        es = eigensystem(ParameterPoint(delta=0.02, g=0.1, gamma=0.1, kappa=-0.1))

        f_plus, f_minus = fidelity(np.array([1.0, 0.3j]), es, "population")

        assert f_plus + f_minus == pytest.approx(1.0)

    def test_paper_policy_can_exceed_one_in_sum(self) -> None:
        """Test non-orthogonal eigenvectors give unnormalized fidelities."""
        es = eigensystem(ParameterPoint(delta=0.0, g=0.1, gamma=0.15, kappa=-0.15))

        f_plus, f_minus = fidelity(np.array([1.0, 0.0]), es)

        assert f_plus + f_minus != pytest.approx(1.0)
