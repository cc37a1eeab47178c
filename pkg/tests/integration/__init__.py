"""Integration tests running bundled experiments end to end."""
