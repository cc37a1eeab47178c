"""Eigenvalue surfaces, degeneracy lines, minimum gaps and loop overlays."""

from bell_switch.spectrum.contours import CONTOUR_TOLERANCE, LevelSet, LevelSetKind, degeneracy_lines
from bell_switch.spectrum.extrema import MinGapReport, locate_min_gap
from bell_switch.spectrum.grid import GridSpec, SurfaceSample, sample_surface
from bell_switch.spectrum.io import (
    GRID_MAGIC,
    read_surface_grid,
    surface_from_grid_file,
    write_level_set_csv,
    write_projection_csv,
    write_surface_csv,
    write_surface_grid,
)
from bell_switch.spectrum.projection import LoopProjection, project_loop

__all__ = [
    "CONTOUR_TOLERANCE",
    "GRID_MAGIC",
    "GridSpec",
    "LevelSet",
    "LevelSetKind",
    "LoopProjection",
    "MinGapReport",
    "SurfaceSample",
    "degeneracy_lines",
    "locate_min_gap",
    "project_loop",
    "read_surface_grid",
    "sample_surface",
    "surface_from_grid_file",
    "write_level_set_csv",
    "write_projection_csv",
    "write_surface_csv",
    "write_surface_grid",
]
