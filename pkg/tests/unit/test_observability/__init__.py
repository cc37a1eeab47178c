"""Unit tests for logging."""
