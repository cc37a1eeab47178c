"""Tests for bell-switch."""
