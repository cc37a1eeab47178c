"""Surface, level-set and projection files."""

from __future__ import annotations

import json
import struct
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import NDArray

from bell_switch.spectrum.contours import LevelSet
from bell_switch.spectrum.grid import GridSpec, SurfaceSample
from bell_switch.spectrum.projection import LoopProjection

#: Leading bytes of the binary grid container.
GRID_MAGIC = b"BSGRID1\n"

#: Arrays stored in the binary container, in file order.
GRID_ARRAYS = ("re_plus", "im_plus", "re_minus", "im_minus", "gap_abs", "discriminant_abs")

SURFACE_COLUMNS = ("x", "y", "reE_plus", "imE_plus", "reE_minus", "imE_minus", "gap")


def _savetxt(path: Path, table: NDArray[np.float64], columns: tuple[str, ...]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        np.savetxt(f, table, fmt="%.17g", delimiter=",", header=",".join(columns), comments="")
    return path


def write_surface_csv(sample: SurfaceSample, path: str | Path) -> Path:
    """Write the sample in long format, one row per node, x varying slowest."""
    gx, gy = np.meshgrid(sample.grid.x_values(), sample.grid.y_values(), indexing="ij")
    table = np.column_stack(
        [
            a.ravel()
            for a in (gx, gy, sample.re_plus, sample.im_plus, sample.re_minus, sample.im_minus, sample.gap_abs)
        ]
    )
    return _savetxt(Path(path), table, SURFACE_COLUMNS)


def write_surface_grid(sample: SurfaceSample, path: str | Path) -> Path:
    """Write the binary container: magic, header length, JSON header, float64 arrays."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "grid": sample.grid.header(),
        "shape": [sample.grid.nx, sample.grid.ny],
        "arrays": list(GRID_ARRAYS),
        "dtype": "<f8",
        "order": "C",
    }
    encoded = json.dumps(header, sort_keys=True).encode("utf-8")
    with path.open("wb") as f:
        f.write(GRID_MAGIC)
        f.write(struct.pack("<Q", len(encoded)))
        f.write(encoded)
        for name in GRID_ARRAYS:
            f.write(np.ascontiguousarray(getattr(sample, name), dtype="<f8").tobytes())
    return path


def read_surface_grid(path: str | Path) -> tuple[dict[str, Any], dict[str, NDArray[np.float64]]]:
    """Read a binary container back into its header and named arrays.

    Raises:
        ValueError: If the file is not a grid container or is truncated.
    """
    data = Path(path).read_bytes()
    if not data.startswith(GRID_MAGIC):
        raise ValueError(f"{path} is not a grid container")
    offset = len(GRID_MAGIC)
    (length,) = struct.unpack_from("<Q", data, offset)
    offset += 8
    header = json.loads(data[offset : offset + length].decode("utf-8"))
    offset += length
    nx, ny = header["shape"]
    size = nx * ny * 8
    arrays: dict[str, NDArray[np.float64]] = {}
    for name in header["arrays"]:
        chunk = data[offset : offset + size]
        if len(chunk) != size:
            raise ValueError(f"{path} is truncated in array {name!r}")
        arrays[name] = np.frombuffer(chunk, dtype="<f8").reshape(nx, ny).copy()
        offset += size
    return header, arrays


def surface_from_grid_file(path: str | Path) -> SurfaceSample:
    """Rebuild a :class:`SurfaceSample` from a binary container."""
    header, arrays = read_surface_grid(path)
    return SurfaceSample(
        grid=GridSpec.model_validate(header["grid"]),
        values_plus=arrays["re_plus"] + 1j * arrays["im_plus"],
        values_minus=arrays["re_minus"] + 1j * arrays["im_minus"],
        gap_abs=arrays["gap_abs"],
        discriminant_abs=arrays["discriminant_abs"],
    )


def write_level_set_csv(level_set: LevelSet, path: str | Path) -> Path:
    """Write polyline vertices with their polyline index."""
    rows = [
        np.column_stack((np.full(len(seg), k, dtype=float), seg))
        for k, seg in enumerate(level_set.segments)
    ]
    table = np.vstack(rows) if rows else np.empty((0, 3))
    return _savetxt(Path(path), table, ("polyline", "x", "y"))


def write_projection_csv(projection: LoopProjection, path: str | Path) -> Path:
    """Write a projected loop with its continued eigenvalues."""
    table = np.column_stack(
        (
            projection.times,
            projection.x,
            projection.y,
            projection.values_plus.real,
            projection.values_plus.imag,
            projection.values_minus.real,
            projection.values_minus.imag,
        )
    )
    columns = ("t", "x", "y", "reE_plus", "imE_plus", "reE_minus", "imE_minus")
    return _savetxt(Path(path), table, columns)
