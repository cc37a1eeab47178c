"""Deterministic artifact writing."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


def dumps(data: Any) -> str:
    """Serialize with sorted keys; floats keep their shortest round-trip repr."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(data: Any, path: str | Path) -> Path:
    """Write *data* as JSON with LF newlines."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(data))
    logger.debug("Wrote %s", path)
    return path
