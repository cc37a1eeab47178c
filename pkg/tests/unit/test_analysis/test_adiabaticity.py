"""Tests for adiabaticity diagnostics."""

from __future__ import annotations

import math

import numpy as np
import pytest

from bell_switch.analysis import adiabaticity_metrics, continued_eigensystems
from bell_switch.model import biorthogonality_defect
from bell_switch.trajectory import Direction, make_symmetric_loop
from tests.fixtures.loops import chiral_loop, symmetric_loop


class TestAdiabaticityMetrics:
    """Tests for adiabaticity_metrics."""

    def test_real_gap_without_complex_stretch(self) -> None:
        """Test a symmetric loop satisfying 16g² > (γ − κ)² keeps a real gap."""
        loop = make_symmetric_loop(0.3, 0.1, 0.2, -1.0, math.pi)

        metrics = adiabaticity_metrics(loop, 256)

        assert metrics.imag_gap_integral == 0.0
        assert metrics.min_gap > 0.0
        assert metrics.n_samples == 256

    def test_complex_gap_on_symmetric_loop(self) -> None:
        """Test the default symmetric loop spends time with a complex gap."""
        metrics = adiabaticity_metrics(symmetric_loop(Direction.CCW), 1024)

        assert metrics.imag_gap_integral > 0.0

    @pytest.mark.parametrize("n_samples", [1000, 1024, 4096])
    def test_symmetric_loop_crossing_ep_locus(self, n_samples: int) -> None:
        """Test the symmetric loop, which crosses the EP locus twice, gives metrics at several sample counts."""
        loop = make_symmetric_loop(0.01, 0.2, 0.2, -1.0, math.pi)

        metrics = adiabaticity_metrics(loop, n_samples)

        assert metrics.min_gap > 0.0
        assert metrics.imag_gap_integral > 0.0
        assert math.isfinite(metrics.max_coupling_rate)

    def test_chiral_loop_stays_gapped(self) -> None:
        """Test the avoided EP keeps the gap open along the modulated loop."""
        metrics = adiabaticity_metrics(chiral_loop(Direction.CCW), 1024)

        assert metrics.min_gap >= 0.17
        assert metrics.imag_gap_integral > 1e-3
        assert metrics.max_coupling_rate > 0.0

    def test_as_dict(self) -> None:
        """Test the JSON view lists all metrics."""
        data = adiabaticity_metrics(chiral_loop(Direction.CCW), 64).as_dict()

        assert set(data) == {"min_gap", "max_coupling_rate", "imag_gap_integral", "n_samples"}

    def test_too_few_samples(self) -> None:
        """Test central differences need enough samples."""
        with pytest.raises(ValueError, match="at least 16"):
            adiabaticity_metrics(chiral_loop(Direction.CCW), 8)


class TestContinuedEigensystems:
    """Tests for continued_eigensystems."""

    def test_biorthonormal_and_continuous(self) -> None:
        """Test every sample is biorthonormal and labels vary smoothly."""
        loop = chiral_loop(Direction.CW)
        times = np.linspace(0.0, loop.period, 201)

        systems = continued_eigensystems(loop, times)

        assert len(systems) == 201
        assert max(biorthogonality_defect(es) for es in systems) < 1e-10
        jumps = [abs(b.value_plus - a.value_plus) for a, b in zip(systems, systems[1:], strict=False)]
        assert max(jumps) < 0.01

    def test_symmetric_loop_labels_carry_through(self) -> None:
        """Test labels are carried across the EP-locus crossings of the symmetric loop."""
        loop = symmetric_loop(Direction.CCW)
        times = np.linspace(0.0, loop.period, 1001)

        systems = continued_eigensystems(loop, times)

        assert len(systems) == 1001
        assert all(np.isfinite(es.value_plus) for es in systems)
