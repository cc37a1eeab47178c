"""Unit tests for time evolution."""
