"""Configuration system for bell-switch.

Main exports:
- SimulatorSettings: Run-wide settings (environment, .env, bellswitch.toml)
- LoggingConfig: Logging configuration
- ExperimentConfig: Strict experiment description
- load_experiment: Load an experiment file or a bundled experiment
"""

from bell_switch.config.experiment import (
    BUNDLED_EXPERIMENTS,
    ExperimentConfig,
    experiment_from_mapping,
    load_experiment,
    parse_angle,
    resolve_output_dir,
)
from bell_switch.config.logging_config import LoggingConfig
from bell_switch.config.settings import SimulatorSettings

__all__ = [
    "BUNDLED_EXPERIMENTS",
    "ExperimentConfig",
    "LoggingConfig",
    "SimulatorSettings",
    "experiment_from_mapping",
    "load_experiment",
    "parse_angle",
    "resolve_output_dir",
]
