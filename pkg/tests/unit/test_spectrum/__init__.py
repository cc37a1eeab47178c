"""Unit tests for eigenvalue surfaces."""
