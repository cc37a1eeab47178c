"""Structured logging setup."""

from __future__ import annotations

import json
import logging
import sys
from typing import Any

import numpy as np

from bell_switch.config.logging_config import LoggingConfig

_RESERVED = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime"}

_PLAIN_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _to_json(value: Any) -> Any:
    # numpy scalars and arrays show up in extras from the numerical modules
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return str(value)


class StructuredFormatter(logging.Formatter):
    """Formatter that outputs one JSON object per log record.

    Keys: ``timestamp``, ``level``, ``logger``, ``message``, plus
    ``exception`` for records with a traceback and ``extra`` for any
    non-standard record attributes.
    """

    def __init__(self, include_extras: bool = True) -> None:
        super().__init__()
        self._include_extras = include_extras

    def format(self, record: logging.LogRecord) -> str:
        data: dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            data["exception"] = self.formatException(record.exc_info)
        if self._include_extras:
            extras = {k: v for k, v in vars(record).items() if k not in _RESERVED and not k.startswith("_")}
            if extras:
                data["extra"] = extras
        return json.dumps(data, default=_to_json)


class RunLogger:
    """Logger for one command invocation.

    Keyword arguments of the logging methods become record extras, merged
    over the context fixed with :meth:`bind`.

    Example:
        >>> log = setup_logging().bind(experiment="fig4", command="classify")
        >>> log.info("Classified", transfer_class="symmetric_identity")
    """

    def __init__(self, logger: logging.Logger, context: dict[str, Any] | None = None) -> None:
        self._logger = logger
        self._context = dict(context or {})

    @property
    def logger(self) -> logging.Logger:
        """The wrapped standard library logger."""
        return self._logger

    @property
    def context(self) -> dict[str, Any]:
        """Extras attached to every record."""
        return dict(self._context)

    def bind(self, **context: Any) -> RunLogger:
        """Return a logger that adds *context* to every record."""
        return RunLogger(self._logger, {**self._context, **context})

    def log(self, level: int, msg: str, *, exc_info: bool = False, **extra: Any) -> None:
        self._logger.log(level, msg, extra={**self._context, **extra}, exc_info=exc_info, stacklevel=2)

    def debug(self, msg: str, **extra: Any) -> None:
        self._logger.debug(msg, extra={**self._context, **extra}, stacklevel=2)

    def info(self, msg: str, **extra: Any) -> None:
        self._logger.info(msg, extra={**self._context, **extra}, stacklevel=2)

    def warning(self, msg: str, **extra: Any) -> None:
        self._logger.warning(msg, extra={**self._context, **extra}, stacklevel=2)

    def error(self, msg: str, **extra: Any) -> None:
        self._logger.error(msg, extra={**self._context, **extra}, stacklevel=2)


def setup_logging(config: LoggingConfig | None = None, name: str = "bell_switch") -> RunLogger:
    """Configure the package logger from *config*.

    Existing handlers on the logger are closed and replaced, so the CLI can
    call this once per command without duplicating output.

    Args:
        config: Logging configuration; defaults to ``LoggingConfig()``.
        name: Logger name.

    Returns:
        A RunLogger over the configured logger.
    """
    config = config or LoggingConfig()
    logger = logging.getLogger(name)
    level = getattr(logging, config.level)
    logger.setLevel(level)

    for existing in list(logger.handlers):
        logger.removeHandler(existing)
        existing.close()

    handler: logging.Handler
    if config.file is not None:
        handler = logging.FileHandler(config.file, encoding="utf-8")
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    if config.structured:
        handler.setFormatter(StructuredFormatter(include_extras=config.include_extras))
    else:
        handler.setFormatter(logging.Formatter(_PLAIN_FORMAT))
    logger.addHandler(handler)
    return RunLogger(logger)
