"""Shared test fixtures and configuration for bell-switch tests."""

from __future__ import annotations

import logging
import os
from collections.abc import Iterator
from pathlib import Path

import pytest

from bell_switch.dynamics import EvolutionRecord, IntegratorConfig, evolve, initial_eigenstate
from bell_switch.spectrum import GridSpec
from bell_switch.trajectory import Direction
from tests.fixtures.loops import chiral_loop


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run every test from an empty directory without BELLSWITCH_ variables.

    Keeps a developer's ``.env`` or ``bellswitch.toml`` out of settings tests.
    """
    for name in list(os.environ):
        if name.startswith("BELLSWITCH_"):
            monkeypatch.delenv(name)
    work = tmp_path / "cwd"
    work.mkdir()
    monkeypatch.chdir(work)
    return work


@pytest.fixture
def fast_integrator() -> IntegratorConfig:
    """RK4 settings accurate enough for classification, with few observations."""
    return IntegratorConfig(steps_per_period=8000, samples=200)


@pytest.fixture(scope="session")
def chiral_records() -> dict[Direction, EvolutionRecord]:
    """Both traversals of the modulated-dissipation loop from the plus eigenstate."""
    cfg = IntegratorConfig(steps_per_period=8000, samples=200)
    records = {}
    for direction in Direction:
        loop = chiral_loop(direction)
        records[direction] = evolve(loop, initial_eigenstate(loop, "plus", cfg), cfg)
    return records


@pytest.fixture
def aep_grid() -> GridSpec:
    """Coarse (γ, δ) slice at g = 0.1 around the avoided EP of the chiral loop."""
    return GridSpec(
        name="aep",
        axis_x="gamma",
        axis_y="delta",
        x_range=(0.0, 0.1),
        y_range=(-0.05, 0.05),
        nx=41,
        ny=41,
        fixed={"g": 0.1},
        alpha=-1.0,
        reference=(0.0, 0.0),
    )


@pytest.fixture
def ep_grid() -> GridSpec:
    """Coarse (g, γ) slice at δ = 0 whose origin is an EP."""
    return GridSpec(
        name="g_gamma",
        axis_x="g",
        axis_y="gamma",
        x_range=(-0.3, 0.3),
        y_range=(-0.3, 0.3),
        nx=41,
        ny=41,
        fixed={"delta": 0.0},
        alpha=-1.0,
        reference=(0.0, 0.0),
    )


@pytest.fixture(autouse=True)
def reset_package_logger() -> Iterator[None]:
    """Drop handlers that setup_logging installed during a test."""
    yield
    logger = logging.getLogger("bell_switch")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.setLevel(logging.NOTSET)
