"""
Bell Switch - Bell-state transfer by encircling exceptional points.

Simulates the dissipative Jaynes-Cummings model restricted to its
single-excitation sector: one qubit and one cavity mode sharing a
quantum, each with its own loss rate. Slowly driving the coupling,
detuning and losses around a closed loop that encloses (or nearly
encloses) an exceptional point transfers one Bell state into the other
or leaves it unchanged, depending on the direction of travel.

Quick Start:
    >>> import math
    >>> from bell_switch import IntegratorConfig, classify_transfer, evolve, initial_eigenstate
    >>> from bell_switch import make_chiral_modulated_loop
    >>> cfg = IntegratorConfig()
    >>> cw, ccw = (make_chiral_modulated_loop(0.1, 0.04, 0.1, -1.0, w) for w in (-math.pi, math.pi))
    >>> rec_cw = evolve(cw, initial_eigenstate(cw, "plus", cfg), cfg)
    >>> rec_ccw = evolve(ccw, initial_eigenstate(ccw, "plus", cfg), cfg)
    >>> print(classify_transfer(rec_cw, rec_ccw).transfer_class)
    symmetric_identity

From the command line:
    $ bell-switch classify --config fig4
    $ bell-switch spectrum --config fig1 --out runs/

Key Features:
    - Closed-form eigenvalues, discriminant and exceptional-point search
    - Biorthogonal eigenvectors with branch continuation along loops
    - Fixed-step RK4 and adaptive embedded Runge-Kutta propagation of the unnormalized state
    - Eigenvalue surfaces, degeneracy lines and minimum-gap location
    - Chiral / symmetric transfer classification with stability checks
"""

from bell_switch.analysis import (
    AnalysisConfig,
    TransferClass,
    TransferMap,
    TransferVerdict,
    classify_transfer,
)
from bell_switch.config import ExperimentConfig, SimulatorSettings, load_experiment
from bell_switch.dynamics import EvolutionRecord, IntegratorConfig, StateVector, evolve, initial_eigenstate
from bell_switch.model import Eigensystem, ParameterPoint, eigensystem, find_ep
from bell_switch.spectrum import GridSpec, locate_min_gap, sample_surface
from bell_switch.trajectory import (
    Direction,
    Loop,
    make_chiral_modulated_loop,
    make_constant_dissipation_loop,
    make_symmetric_loop,
)

__all__ = [
    "AnalysisConfig",
    "Direction",
    "Eigensystem",
    "EvolutionRecord",
    "ExperimentConfig",
    "GridSpec",
    "IntegratorConfig",
    "Loop",
    "ParameterPoint",
    "SimulatorSettings",
    "StateVector",
    "TransferClass",
    "TransferMap",
    "TransferVerdict",
    "__version__",
    "classify_transfer",
    "eigensystem",
    "evolve",
    "find_ep",
    "initial_eigenstate",
    "load_experiment",
    "locate_min_gap",
    "make_chiral_modulated_loop",
    "make_constant_dissipation_loop",
    "make_symmetric_loop",
    "sample_surface",
]

# Version is dynamically set by hatch-vcs during build
try:
    from bell_switch._version import __version__
except ImportError:
    __version__ = "0.0.0.dev0"
