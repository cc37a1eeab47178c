"""Tests for tabulated loops."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from bell_switch.errors import InvalidLoopError
from bell_switch.trajectory import CustomLoop, Direction, LoopKind, load_custom_loop


@pytest.fixture
def square_csv(tmp_path: Path) -> Path:
    """A closed square in the (g, δ) plane."""
    path = tmp_path / "square.csv"
    path.write_text("t,g,delta\n0,0.1,-0.1\n1,0.3,-0.1\n2,0.3,0.1\n3,0.1,0.1\n4,0.1,-0.1\n")
    return path


class TestLoadCustomLoop:
    """Tests for load_custom_loop."""

    def test_interpolates(self, square_csv: Path) -> None:
        """Test values between rows are linear and fixed values fill the rest."""
        loop = load_custom_loop(square_csv, fixed={"gamma": 0.1}, alpha=-1.0)

        p = loop.evaluate(0.5)

        assert loop.kind is LoopKind.CUSTOM
        assert loop.period == 4.0
        assert p.g == pytest.approx(0.2)
        assert p.delta == pytest.approx(-0.1)
        assert p.gamma == 0.1
        assert p.kappa == -0.1
        assert loop.is_closed
        assert loop.constants["source"] == "square.csv"

    def test_repeats_after_period(self, square_csv: Path) -> None:
        """Test the table repeats outside its interval."""
        loop = load_custom_loop(square_csv)

        assert loop.evaluate(5.5).g == pytest.approx(loop.evaluate(1.5).g)
        assert loop.evaluate(4.0).g == pytest.approx(0.1)

    def test_reversed(self, square_csv: Path) -> None:
        """Test reversal walks the table backwards and flips the label."""
        loop = load_custom_loop(square_csv, direction=Direction.CW)
        back = loop.reversed()

        assert back.direction is Direction.CCW
        assert back.evaluate(1.0).g == pytest.approx(loop.evaluate(3.0).g)
        assert back.evaluate(1.0).delta == pytest.approx(loop.evaluate(3.0).delta)

    def test_tabulated_kappa_drops_alpha(self, tmp_path: Path) -> None:
        """Test a κ column takes precedence over the loss ratio."""
        path = tmp_path / "k.csv"
        path.write_text("t,gamma,kappa\n0,0.1,0.2\n1,0.1,0.3\n")

        loop = load_custom_loop(path, alpha=-1.0)

        assert loop.alpha is None
        assert loop.evaluate(0.5).kappa == pytest.approx(0.25)

    def test_missing_time_column(self, tmp_path: Path) -> None:
        """Test a table without t is rejected."""
        path = tmp_path / "no_t.csv"
        path.write_text("g,delta\n0.1,0\n0.2,0\n")

        with pytest.raises(InvalidLoopError, match="no 't' column"):
            load_custom_loop(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test unreadable files surface as loop errors."""
        with pytest.raises(InvalidLoopError) as exc_info:
            load_custom_loop(tmp_path / "missing.csv")

        assert exc_info.value.reason == "file"

    def test_omega_a_column(self, tmp_path: Path) -> None:
        """Test the atomic frequency cannot be tabulated."""
        path = tmp_path / "w.csv"
        path.write_text("t,omega_a\n0,1\n1,1\n")

        with pytest.raises(InvalidLoopError, match="omega_a"):
            load_custom_loop(path)


class TestCustomLoopValidation:
    """Tests for CustomLoop construction."""

    def test_times_must_increase(self) -> None:
        """Test repeated times are rejected."""
        with pytest.raises(InvalidLoopError, match="increase"):
            CustomLoop(times=np.array([0.0, 1.0, 1.0]), columns={"g": np.zeros(3)})

    def test_too_few_samples(self) -> None:
        """Test a single row is not a loop."""
        with pytest.raises(InvalidLoopError, match="two samples"):
            CustomLoop(times=np.array([0.0]), columns={"g": np.zeros(1)})

    def test_unknown_column(self) -> None:
        """Test unknown parameter names are listed."""
        with pytest.raises(InvalidLoopError, match="foo"):
            CustomLoop(times=np.array([0.0, 1.0]), columns={"foo": np.zeros(2)})

    def test_non_finite_column(self) -> None:
        """Test NaN samples are rejected."""
        with pytest.raises(InvalidLoopError, match="Column g"):
            CustomLoop(times=np.array([0.0, 1.0]), columns={"g": np.array([0.0, np.nan])})

    def test_kappa_with_alpha(self) -> None:
        """Test κ cannot be tabulated while α ties it to γ."""
        with pytest.raises(InvalidLoopError, match="kappa"):
            CustomLoop(times=np.array([0.0, 1.0]), columns={"kappa": np.zeros(2)}, alpha=-1.0)

    def test_open_table(self) -> None:
        """Test a table whose ends differ is reported open."""
        loop = CustomLoop(times=np.array([0.0, 1.0]), columns={"g": np.array([0.0, 0.1])})

        assert not loop.is_closed
