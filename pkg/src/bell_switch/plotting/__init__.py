"""Generated plotting scripts for external rendering."""

from bell_switch.plotting.scripts import create_environment, fidelity_script, surface_script, write_script

__all__ = ["create_environment", "fidelity_script", "surface_script", "write_script"]
