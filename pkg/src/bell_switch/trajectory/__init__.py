"""Parameter loops and their geometry."""

from bell_switch.trajectory.custom import CustomLoop, load_custom_loop
from bell_switch.trajectory.diagnostics import (
    WINDING_SAMPLES,
    EncirclementReport,
    encirclement_diagnostic,
)
from bell_switch.trajectory.loops import (
    ChiralModulatedLoop,
    ConstantDissipationLoop,
    Direction,
    Loop,
    LoopKind,
    SymmetricLoop,
    evaluate,
    make_chiral_modulated_loop,
    make_constant_dissipation_loop,
    make_symmetric_loop,
)

__all__ = [
    "WINDING_SAMPLES",
    "ChiralModulatedLoop",
    "ConstantDissipationLoop",
    "CustomLoop",
    "Direction",
    "EncirclementReport",
    "Loop",
    "LoopKind",
    "SymmetricLoop",
    "encirclement_diagnostic",
    "evaluate",
    "load_custom_loop",
    "make_chiral_modulated_loop",
    "make_constant_dissipation_loop",
    "make_symmetric_loop",
]
