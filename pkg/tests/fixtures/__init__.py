"""Test fixtures for bell-switch."""
