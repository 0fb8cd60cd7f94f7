"""Exact solutions of the level-1 boundary qKZ system in Hecke path representations."""

__version__ = "0.1.0"
