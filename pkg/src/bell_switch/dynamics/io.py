"""CSV serialization of evolution records."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from bell_switch.dynamics.evolve import EvolutionRecord

#: Column order of record files.
RECORD_COLUMNS = (
    "t",
    "re_amp_e0",
    "im_amp_e0",
    "re_amp_g1",
    "im_amp_g1",
    "log_norm",
    "F_plus",
    "F_minus",
    "reE_plus",
    "imE_plus",
    "reE_minus",
    "imE_minus",
)


def record_table(record: EvolutionRecord) -> np.ndarray:
    """Return the record as a real table with columns :data:`RECORD_COLUMNS`."""
    return np.column_stack(
        (
            record.times,
            record.states[:, 0].real,
            record.states[:, 0].imag,
            record.states[:, 1].real,
            record.states[:, 1].imag,
            record.log_norm,
            record.fidelity_plus,
            record.fidelity_minus,
            record.energies_plus.real,
            record.energies_plus.imag,
            record.energies_minus.real,
            record.energies_minus.imag,
        )
    )


def write_record_csv(record: EvolutionRecord, path: str | Path) -> Path:
    """Write one row per observation time with 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        np.savetxt(
            f,
            record_table(record),
            fmt="%.17g",
            delimiter=",",
            header=",".join(RECORD_COLUMNS),
            comments="",
        )
    return path


def read_record_table(path: str | Path) -> dict[str, np.ndarray]:
    """Read a record CSV back into columns by name."""
    table = np.genfromtxt(Path(path), delimiter=",", names=True, dtype=float, encoding="utf-8")
    return {name: np.asarray(table[name]) for name in RECORD_COLUMNS}
