"""Time evolution along parameter loops."""

from bell_switch.dynamics.config import FidelityPolicy, IntegratorConfig, Labeling, Scheme
from bell_switch.dynamics.continuation import (
    AMBIGUITY_TOLERANCE,
    Assignment,
    AssignmentRule,
    assignment_scores,
    branch_continue,
    choose_assignment,
    continue_labels,
    proximity_scores,
    swap_mask,
)
from bell_switch.dynamics.evolve import EvolutionRecord, evolve, initial_eigenstate
from bell_switch.dynamics.fidelity import fidelity
from bell_switch.dynamics.io import RECORD_COLUMNS, read_record_table, record_table, write_record_csv
from bell_switch.dynamics.state import StateVector, initial_bell_state

__all__ = [
    "AMBIGUITY_TOLERANCE",
    "RECORD_COLUMNS",
    "Assignment",
    "AssignmentRule",
    "EvolutionRecord",
    "FidelityPolicy",
    "IntegratorConfig",
    "Labeling",
    "Scheme",
    "StateVector",
    "assignment_scores",
    "branch_continue",
    "choose_assignment",
    "continue_labels",
    "evolve",
    "fidelity",
    "initial_bell_state",
    "initial_eigenstate",
    "proximity_scores",
    "read_record_table",
    "record_table",
    "swap_mask",
    "write_record_csv",
]
