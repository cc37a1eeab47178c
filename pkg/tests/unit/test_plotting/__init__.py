"""Unit tests for plot script generation."""
