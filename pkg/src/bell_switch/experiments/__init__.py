"""Bundled experiment files, loadable by name with ``load_experiment``."""
