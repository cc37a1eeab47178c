"""Command-line interface."""

from bell_switch.cli.commands import COMMANDS, RunContext, cmd_classify, cmd_evolve, cmd_spectrum, cmd_sweep
from bell_switch.cli.main import build_parser, main

__all__ = [
    "COMMANDS",
    "RunContext",
    "build_parser",
    "cmd_classify",
    "cmd_evolve",
    "cmd_spectrum",
    "cmd_sweep",
    "main",
]
