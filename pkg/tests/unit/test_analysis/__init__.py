"""Unit tests for transfer analysis."""
