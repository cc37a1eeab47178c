"""Unit tests for terminal rendering."""
