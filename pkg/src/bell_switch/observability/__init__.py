"""Logging for simulation runs."""

from bell_switch.observability.logging import RunLogger, StructuredFormatter, setup_logging

__all__ = ["RunLogger", "StructuredFormatter", "setup_logging"]
