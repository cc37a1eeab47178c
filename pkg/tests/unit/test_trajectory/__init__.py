"""Unit tests for loops and loop diagnostics."""
