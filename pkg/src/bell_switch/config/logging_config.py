"""Logging configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class LoggingConfig(BaseModel):
    """Configuration for logging behavior.

    Attributes:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        structured: Emit one JSON object per record instead of plain text.
        file: Optional log file; stderr is used when unset.
        include_extras: Attach keyword context to structured records.
    """

    level: LogLevel = Field(
        default="INFO",
        description="Log level",
    )
    structured: bool = Field(
        default=False,
        description="Enable JSON format logging",
    )
    file: Path | None = Field(
        default=None,
        description="Log file path (stderr when unset)",
    )
    include_extras: bool = Field(
        default=True,
        description="Include keyword context in structured records",
    )
