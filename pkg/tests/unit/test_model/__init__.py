"""Unit tests for the model core."""
