"""Unit tests for bell-switch."""
