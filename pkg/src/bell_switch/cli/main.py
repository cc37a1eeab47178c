"""Command-line entry point.

Usage::

    bell-switch spectrum --config fig1
    bell-switch classify --config fig4 --display plain
    bell-switch sweep --config my_sweep.toml --workers 4 --out runs/

Exit codes: 0 success, 2 configuration, 3 loop geometry, 4 integration,
5 result contradicts the experiment's ``expect`` block.

JSON reports write floats in the shortest form that round-trips to the
same double; CSV records use 17 significant digits.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from bell_switch.cli.commands import COMMANDS, RunContext
from bell_switch.config import SimulatorSettings, load_experiment, resolve_output_dir
from bell_switch.config.logging_config import LoggingConfig
from bell_switch.errors import ConfigurationError, SimulationError
from bell_switch.observability import setup_logging

logger = logging.getLogger(__name__)

_SEED_LABELS = {"plus": ("plus",), "minus": ("minus",), "both": ("plus", "minus")}

_OUTPUT_NOTE = (
    "JSON floats use the shortest representation that round-trips to the same double; "
    "CSV floats use 17 significant digits."
)


def build_parser() -> argparse.ArgumentParser:
    """Parser with one sub-command per experiment stage."""
    parser = argparse.ArgumentParser(
        prog="bell-switch",
        description="Bell-state switching by loops around (approximate) exceptional points",
        epilog=_OUTPUT_NOTE,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "spectrum": "Sample eigenvalue surfaces, degeneracy lines and the minimum gap",
        "evolve": "Integrate the state along the loop and write fidelity records",
        "classify": "Evolve both directions and classify the transfer",
        "sweep": "Classify over the values of one loop constant",
    }
    for name, text in helps.items():
        cmd = sub.add_parser(
            name, help=text, epilog=_OUTPUT_NOTE, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        cmd.add_argument("--config", required=True, help="Experiment file or bundled name (fig1..fig6, fig6-slow)")
        cmd.add_argument("--out", type=Path, default=None, help="Output root directory")
        cmd.add_argument(
            "--settings",
            type=Path,
            default=None,
            help="Settings file (TOML, YAML or pyproject.toml) read instead of .env",
        )
        cmd.add_argument("--workers", type=int, default=None, help="Worker processes for sweeps")
        cmd.add_argument(
            "--seed-label",
            choices=sorted(_SEED_LABELS),
            default=None,
            help="Initial eigenstate label(s) to run (default: the experiment's evolve.labels)",
        )
        cmd.add_argument("--display", choices=("rich", "plain", "none"), default=None, help="Terminal output")
        cmd.add_argument(
            "--log-level",
            choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
            default=None,
            help="Override the configured log level",
        )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit code."""
    args = build_parser().parse_args(argv)

    try:
        settings = SimulatorSettings.from_file(args.settings) if args.settings else SimulatorSettings()
    except (ValidationError, FileNotFoundError, ValueError) as e:
        setup_logging(LoggingConfig())
        logger.error("Invalid settings: %s", e)
        return ConfigurationError.exit_code

    log_config = settings.logging
    if args.log_level:
        log_config = log_config.model_copy(update={"level": args.log_level})
    run_log = setup_logging(log_config).bind(command=args.command)

    try:
        config = load_experiment(args.config)
        workers = args.workers if args.workers is not None else settings.workers
        if workers < 1:
            raise ConfigurationError(f"--workers must be at least 1, got {workers}", config_key="workers")
        labels = _SEED_LABELS[args.seed_label] if args.seed_label else tuple(config.evolve.labels)
        root = resolve_output_dir(args.out, config, settings.output_dir)
        ctx = RunContext(
            config=config,
            out_dir=root / config.name,
            workers=workers,
            display=args.display or settings.display,
            labels=labels,
        )
        run_log = run_log.bind(experiment=config.name)
        run_log.info(f"Running {args.command} on {config.name}", out_dir=str(ctx.out_dir), workers=workers)
        return COMMANDS[args.command](ctx)
    except SimulationError as e:
        run_log.error(f"{args.command} failed: {e}", error=e.to_dict())
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
