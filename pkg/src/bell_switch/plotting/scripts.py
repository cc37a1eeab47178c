"""Ready-to-run matplotlib scripts for the written data files."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from pathlib import Path

from jinja2 import Environment, PackageLoader, StrictUndefined

from bell_switch.spectrum.extrema import MinGapReport
from bell_switch.spectrum.grid import GridSpec
from bell_switch.spectrum.io import GRID_MAGIC


def create_environment() -> Environment:
    """Jinja2 environment over the bundled script templates."""
    return Environment(
        loader=PackageLoader("bell_switch.plotting", "templates"),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )


def surface_script(
    grid: GridSpec,
    *,
    grid_file: str,
    level_set_files: Mapping[str, str],
    projection_file: str | None = None,
    min_gap: MinGapReport | None = None,
    script_name: str = "plot_surface.py",
) -> str:
    """Script drawing both sheets, the degeneracy lines and the loop overlay.

    File names are resolved relative to the script's own directory.
    """
    marker = None
    if min_gap is not None:
        p = grid.point(*min_gap.point)
        centre = (2.0 * (2.0 * p.omega_a + p.delta) - 1j * (p.gamma + p.kappa)) / 4.0
        marker = {
            "x": repr(min_gap.point[0]),
            "y": repr(min_gap.point[1]),
            "re": repr(centre.real),
            "im": repr(centre.imag),
            "color": "magenta" if min_gap.is_ep else "black",
        }
    return create_environment().get_template("surface.py.jinja2").render(
        title=grid.name,
        axis_x=grid.axis_x,
        axis_y=grid.axis_y,
        magic=repr(GRID_MAGIC),
        magic_length=len(GRID_MAGIC),
        grid_file=grid_file,
        level_sets=sorted(level_set_files.items()),
        projection_file=projection_file,
        marker=marker,
        script_name=script_name,
    )


def fidelity_script(
    runs: Sequence[tuple[str, str]],
    *,
    title: str,
    script_name: str = "plot_fidelity.py",
) -> str:
    """Script drawing F₊ and F₋ against time, one panel per record file.

    Args:
        runs: (panel label, CSV file name) pairs.
        title: Figure title.
        script_name: File name the script is written under.
    """
    return create_environment().get_template("fidelity.py.jinja2").render(
        runs=[{"label": label, "file": name} for label, name in runs],
        title=title,
        script_name=script_name,
    )


def write_script(text: str, path: str | Path) -> Path:
    """Write a generated script with LF newlines."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return path
