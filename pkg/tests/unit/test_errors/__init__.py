"""Unit tests for the exception hierarchy."""
