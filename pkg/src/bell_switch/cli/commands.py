"""Subcommand implementations.

Each command takes a :class:`RunContext` and returns a process exit code;
simulator errors propagate to :func:`bell_switch.cli.main.main`, which maps
them to their ``exit_code``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from bell_switch.analysis import (
    SweepRow,
    TransferVerdict,
    adiabaticity_metrics,
    build_report,
    classify_transfer,
    verdict_stability,
)
from bell_switch.cli.output import write_json
from bell_switch.config.experiment import ExperimentConfig
from bell_switch.display import print_min_gap, print_sweep, print_verdict
from bell_switch.dynamics import (
    EvolutionRecord,
    evolve,
    initial_bell_state,
    initial_eigenstate,
    write_record_csv,
)
from bell_switch.errors import ConfigurationError, EmptyLevelSetError
from bell_switch.model.eigensystem import Label
from bell_switch.plotting import fidelity_script, surface_script, write_script
from bell_switch.spectrum import (
    LevelSetKind,
    MinGapReport,
    degeneracy_lines,
    locate_min_gap,
    project_loop,
    sample_surface,
    write_level_set_csv,
    write_projection_csv,
    write_surface_csv,
    write_surface_grid,
)
from bell_switch.trajectory import Direction, encirclement_diagnostic

logger = logging.getLogger(__name__)

#: Exit code when a run finishes but contradicts the experiment's ``expect`` block.
EXIT_EXPECTATION = 5


@dataclass(frozen=True)
class RunContext:
    """Everything a subcommand needs.

    Attributes:
        config: The experiment.
        out_dir: Directory receiving this experiment's artifacts.
        workers: Worker processes for sweeps.
        display: ``"rich"``, ``"plain"`` or ``"none"``.
        labels: Initial labels to run.
    """

    config: ExperimentConfig
    out_dir: Path
    workers: int = 1
    display: str = "rich"
    labels: tuple[Label, ...] = ("plus", "minus")

    def wants(self, fmt: str) -> bool:
        return fmt in self.config.output.formats


def _show(ctx: RunContext, render: Any, *args: Any, **kwargs: Any) -> None:
    if ctx.display != "none":
        render(*args, format=ctx.display, **kwargs)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def cmd_spectrum(ctx: RunContext) -> int:
    """Sample every grid, extract D and L lines, locate the minimum gap and
    overlay the loop when the experiment has one.

    Raises:
        ConfigurationError: If the experiment has no grids.
        PlaneMismatchError: If the loop leaves a grid's plane.
    """
    config = ctx.config
    if not config.grids:
        raise ConfigurationError("spectrum needs at least one grid", config_key="grids")
    loop = config.build_loop(Direction.CCW) if config.loop is not None else None

    entries: list[dict[str, Any]] = []
    reports: list[MinGapReport] = []
    for grid in config.grids:
        sample = sample_surface(grid)
        base = ctx.out_dir / grid.name
        grid_file = base.with_suffix(".bsgrid")
        if ctx.wants("grid"):
            write_surface_grid(sample, grid_file)
        if ctx.wants("csv"):
            write_surface_csv(sample, base.parent / f"{grid.name}_surface.csv")

        level_sets: dict[str, Any] = {}
        level_files: dict[str, str] = {}
        for kind in LevelSetKind:
            try:
                level_set = degeneracy_lines(sample, kind)
            except EmptyLevelSetError:
                level_sets[str(kind)] = None
                continue
            level_sets[str(kind)] = {
                "polylines": len(level_set.segments),
                "vertices": level_set.vertex_count,
                "max_residual": level_set.max_residual,
            }
            name = f"{grid.name}_{kind}.csv"
            if ctx.wants("csv"):
                write_level_set_csv(level_set, ctx.out_dir / name)
                level_files[str(kind)] = name

        report = locate_min_gap(sample)
        reports.append(report)

        projection_name = None
        if loop is not None:
            projection = project_loop(grid, loop, config.integrator.samples)
            if ctx.wants("csv"):
                projection_name = f"{grid.name}_loop.csv"
                write_projection_csv(projection, ctx.out_dir / projection_name)

        if ctx.wants("script") and ctx.wants("grid") and ctx.wants("csv"):
            script_name = f"plot_{grid.name}.py"
            text = surface_script(
                grid,
                grid_file=grid_file.name,
                level_set_files=level_files,
                projection_file=projection_name,
                min_gap=report,
                script_name=script_name,
            )
            write_script(text, ctx.out_dir / script_name)

        entries.append(
            {
                "grid": grid.name,
                "axes": list(grid.axes),
                "note": grid.note,
                "min_gap": report.as_dict(),
                "level_sets": level_sets,
            }
        )

    summary: dict[str, Any] = {"experiment": config.name, "grids": entries}
    if config.encirclement is not None and loop is not None:
        winding = encirclement_diagnostic(loop, config.encirclement.reference, config.encirclement.plane)
        summary["encirclement"] = {
            "plane": list(winding.plane),
            "reference": list(config.encirclement.reference),
            "winding_number": winding.winding_number,
            "turns": winding.turns,
            "min_distance": winding.min_distance,
        }

    status = 0
    mismatched = [
        r.grid_name for r in reports if r.grid_name in config.expect.is_ep and config.expect.is_ep[r.grid_name] != r.is_ep
    ]
    if config.expect.is_ep:
        summary["matches_expected"] = not mismatched
    if mismatched:
        logger.error("EP verdict differs from expectation on %s", ", ".join(mismatched))
        status = EXIT_EXPECTATION
    if ctx.wants("json"):
        write_json(summary, ctx.out_dir / "spectrum.json")
    _show(ctx, print_min_gap, reports)
    return status


# ---------------------------------------------------------------------------
# evolve
# ---------------------------------------------------------------------------


def run_records(config: ExperimentConfig, labels: tuple[Label, ...]) -> dict[tuple[Label, Direction], EvolutionRecord]:
    """Evolve every requested (initial label, direction) pair.

    Raises:
        ConfigurationError: If the experiment has no loop block.
    """
    if config.loop is None:
        raise ConfigurationError("evolve needs a loop block", config_key="loop")
    records: dict[tuple[Label, Direction], EvolutionRecord] = {}
    for label in labels:
        for direction in config.directions():
            loop = config.build_loop(direction)
            if config.evolve.start == "bell":
                psi0 = initial_bell_state(label)
            else:
                psi0 = initial_eigenstate(loop, label, config.integrator)
            record = evolve(loop, psi0, config.integrator)
            logger.info(
                "Evolved %s from %s: F+=%.6f F-=%.6f",
                direction,
                label,
                record.final_fidelity_plus,
                record.final_fidelity_minus,
            )
            records[(label, direction)] = record
    return records


def _write_records(ctx: RunContext, records: dict[tuple[Label, Direction], EvolutionRecord]) -> None:
    runs = []
    for (label, direction), record in records.items():
        name = f"evolve_{label}_{direction}.csv"
        if ctx.wants("csv"):
            write_record_csv(record, ctx.out_dir / name)
            runs.append((f"{direction.upper()}, start {label}", name))
    if runs and ctx.wants("script"):
        write_script(fidelity_script(runs, title=ctx.config.name), ctx.out_dir / "plot_fidelity.py")


def cmd_evolve(ctx: RunContext) -> int:
    """Write one record per initial label and direction."""
    records = run_records(ctx.config, ctx.labels)
    _write_records(ctx, records)
    return 0


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def _classify(
    config: ExperimentConfig, records: dict[tuple[Label, Direction], EvolutionRecord], labels: tuple[Label, ...]
) -> list[TransferVerdict]:
    threshold = config.analysis.threshold
    return [
        classify_transfer(
            records[(label, Direction.CW)],
            records[(label, Direction.CCW)],
            threshold,
            slack=config.analysis.fidelity_slack,
        )
        for label in labels
    ]


def _require_both_directions(config: ExperimentConfig) -> None:
    if config.loop is not None and config.loop.directions != "both":
        raise ConfigurationError(
            "classification needs both directions; set loop.directions = \"both\"",
            config_key="loop.directions",
        )


def cmd_classify(ctx: RunContext) -> int:
    """Evolve both directions, classify, and compare with the expected class."""
    config = ctx.config
    _require_both_directions(config)
    records = run_records(config, ctx.labels)
    _write_records(ctx, records)
    verdicts = _classify(config, records, ctx.labels)

    ccw_loop = records[(ctx.labels[0], Direction.CCW)].loop
    metrics = adiabaticity_metrics(ccw_loop, config.analysis.adiabaticity_samples, floor=config.integrator.degeneracy_floor)
    winding = None
    if config.encirclement is not None:
        winding = encirclement_diagnostic(ccw_loop, config.encirclement.reference, config.encirclement.plane)
    expected = str(config.expect.transfer_class) if config.expect.transfer_class is not None else None

    reports = []
    for label, verdict in zip(ctx.labels, verdicts, strict=True):
        cw, ccw = records[(label, Direction.CW)], records[(label, Direction.CCW)]
        stability = verdict_stability(cw, ccw, config.analysis.stability_thresholds)
        reports.append(
            build_report(
                cw,
                ccw,
                verdict,
                stability=stability,
                metrics=metrics,
                encirclement=winding,
                name=config.name,
                expected=expected,
            )
        )
        _show(ctx, print_verdict, verdict, title=f"{config.name} (start {label})")

    classes = {str(v.transfer_class) for v in verdicts}
    if len(classes) > 1:
        logger.warning("Class depends on the initial label: %s", ", ".join(sorted(classes)))
    summary: dict[str, Any] = {"experiment": config.name, "reports": reports}
    if config.expect.note:
        summary["note"] = config.expect.note
    if ctx.wants("json"):
        write_json(summary, ctx.out_dir / "classify.json")

    if expected is not None and classes != {expected}:
        logger.error("Expected %s, got %s", expected, ", ".join(sorted(classes)))
        return EXIT_EXPECTATION
    return 0


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def sweep_variant(config: ExperimentConfig, parameter: str, value: float) -> ExperimentConfig:
    """Return *config* with one loop constant, ``alpha`` or ``threshold`` replaced.

    Raises:
        ConfigurationError: If *parameter* names nothing that can be swept.
    """
    if parameter == "threshold":
        analysis = config.analysis.model_copy(update={"threshold": value})
        return config.model_copy(update={"analysis": analysis})
    if parameter == "alpha":
        model = config.model.model_copy(update={"alpha": value})
        return config.model_copy(update={"model": model})
    if config.loop is None or parameter in ("kind", "directions", "path") or parameter not in type(config.loop).model_fields:
        raise ConfigurationError(
            f"Cannot sweep {parameter!r}: not a constant of the loop, 'alpha' or 'threshold'",
            config_key="sweep.parameter",
        )
    loop = config.loop.model_copy(update={parameter: value})
    return config.model_copy(update={"loop": loop})


def sweep_point(config: ExperimentConfig, parameter: str, value: float, labels: tuple[Label, ...]) -> list[SweepRow]:
    """Evolve and classify one sweep value."""
    variant = sweep_variant(config, parameter, value)
    records = run_records(variant, labels)
    return [SweepRow.from_verdict(value, v) for v in _classify(variant, records, labels)]


def cmd_sweep(ctx: RunContext) -> int:
    """Classify at every sweep value, in parallel when workers > 1."""
    config = ctx.config
    if config.sweep is None:
        raise ConfigurationError("sweep needs a sweep block", config_key="sweep")
    _require_both_directions(config)
    parameter, values = config.sweep.parameter, config.sweep.values
    sweep_variant(config, parameter, values[0])

    if ctx.workers > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=min(ctx.workers, len(values))) as pool:
            futures = [pool.submit(sweep_point, config, parameter, v, ctx.labels) for v in values]
            results = [f.result() for f in futures]
    else:
        results = [sweep_point(config, parameter, v, ctx.labels) for v in values]
    rows = [row for result in results for row in result]

    if ctx.wants("csv"):
        path = ctx.out_dir / "sweep.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="\n") as f:
            f.write("value,initial_label,class,cw_same,cw_opposite,ccw_same,ccw_opposite\n")
            for r in rows:
                numbers = [r.cw_same, r.cw_opposite, r.ccw_same, r.ccw_opposite]
                cells = [f"{r.value:.17g}", r.initial_label, str(r.transfer_class)]
                cells += [f"{x:.17g}" for x in numbers]
                f.write(",".join(cells) + "\n")
    if ctx.wants("json"):
        write_json(
            {"experiment": config.name, "parameter": parameter, "rows": [r.as_dict() for r in rows]},
            ctx.out_dir / "sweep.json",
        )
    _show(ctx, print_sweep, parameter, rows)
    return 0


COMMANDS = {
    "spectrum": cmd_spectrum,
    "evolve": cmd_evolve,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
}

