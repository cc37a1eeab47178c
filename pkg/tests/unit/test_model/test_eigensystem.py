"""Tests for the biorthogonal eigensystem."""

from __future__ import annotations

import math

import numpy as np
import pytest

from bell_switch.errors import DegenerateEigensystemError
from bell_switch.model import (
    ParameterPoint,
    bell_endpoint_check,
    biorthogonality_defect,
    build_hamiltonian,
    eigensystem,
    label_by_bell_overlap,
)

BELL_PLUS = np.array([1.0, 1.0]) / math.sqrt(2.0)


class TestEigensystem:
    """Tests for eigensystem."""

    def test_residuals_and_biorthogonality(self) -> None:
        """Test H r = E r and ⟨left_n|right_m⟩ = δ_nm on random points."""
        rng = np.random.default_rng(7)
        for d, g, gamma, kappa in rng.uniform(-0.5, 0.5, size=(500, 4)):
            p = ParameterPoint(delta=d, g=g, gamma=abs(gamma), kappa=kappa)
            es = eigensystem(p)
            h = build_hamiltonian(p)
            for label in ("plus", "minus"):
                r = es.right(label)
                assert np.linalg.norm(h @ r - es.value(label) * r) < 1e-10
                assert np.linalg.norm(es.left(label) @ h - es.value(label) * es.left(label)) < 1e-10
            assert biorthogonality_defect(es) < 1e-10

    def test_left_is_transpose(self) -> None:
        """Test the covector is the transpose, not the conjugate, of the vector."""
        es = eigensystem(ParameterPoint(delta=0.02, g=0.1, gamma=0.1, kappa=-0.1))

        np.testing.assert_array_equal(es.left_plus, es.right_plus)
        np.testing.assert_array_equal(es.left_minus, es.right_minus)

    def test_gap_is_value_difference(self) -> None:
        """Test E₊ − E₋ = Δ_E."""
        es = eigensystem(ParameterPoint(delta=0.02, g=0.1, gamma=0.1, kappa=-0.1))

        assert es.value_plus - es.value_minus == pytest.approx(es.gap)

    def test_decoupled_point(self) -> None:
        """Test g = 0 still yields a biorthonormal pair."""
        es = eigensystem(ParameterPoint(delta=0.1, gamma=0.05))

        assert biorthogonality_defect(es) < 1e-12

    def test_degenerate_point(self) -> None:
        """Test the EP at 4g = γ − κ, δ = 0 is rejected."""
        with pytest.raises(DegenerateEigensystemError) as exc_info:
            eigensystem(ParameterPoint(g=0.1, gamma=0.2, kappa=-0.2))

        assert exc_info.value.gap == 0.0
        assert exc_info.value.exit_code == 4

    def test_literal_normalization(self) -> None:
        """Test modulus-normalized vectors have unit Euclidean norm."""
        es = eigensystem(ParameterPoint(delta=0.02, g=0.1, gamma=0.1, kappa=-0.1), normalization="literal")

        assert es.normalization == "literal"
        assert np.linalg.norm(es.right_plus) == pytest.approx(1.0)
        assert np.linalg.norm(es.right_minus) == pytest.approx(1.0)

    def test_swapped(self) -> None:
        """Test exchanging labels negates the gap."""
        es = eigensystem(ParameterPoint(g=0.1, gamma=0.05))
        swapped = es.swapped()

        assert swapped.value_plus == es.value_minus
        assert swapped.gap == -es.gap
        np.testing.assert_array_equal(swapped.right_minus, es.right_plus)

    def test_rephased_keeps_biorthogonality(self) -> None:
        """Test phase changes on right vectors are undone on left covectors."""
        es = eigensystem(ParameterPoint(g=0.1, gamma=0.05)).rephased(1j, -1.0)

        assert biorthogonality_defect(es) < 1e-12


class TestBellLabels:
    """Tests for Bell-overlap labelling and endpoint checks."""

    def test_plus_is_symmetric_bell_state(self) -> None:
        """Test plus is the eigenvector along (1, 1)/√2 at a Bell endpoint."""
        es = label_by_bell_overlap(eigensystem(ParameterPoint(g=0.1)))

        overlap = abs(np.vdot(BELL_PLUS, es.right_plus)) / np.linalg.norm(es.right_plus)
        assert overlap == pytest.approx(1.0)
        assert es.value_plus.real == pytest.approx(1.1)

    def test_relabel_is_idempotent(self) -> None:
        """Test labelling twice changes nothing."""
        once = label_by_bell_overlap(eigensystem(ParameterPoint(g=0.1, gamma=0.01, kappa=-0.01)))
        twice = label_by_bell_overlap(once)

        assert twice.value_plus == once.value_plus

    def test_bell_endpoint_check(self) -> None:
        """Test endpoints need δ = 0 and γ = κ."""
        assert bell_endpoint_check(ParameterPoint(g=0.21))
        assert bell_endpoint_check(ParameterPoint(g=0.1, gamma=0.1, kappa=0.1))
        assert not bell_endpoint_check(ParameterPoint(g=0.1, delta=1e-3))
        assert not bell_endpoint_check(ParameterPoint(g=0.1, gamma=0.1, kappa=-0.1))
