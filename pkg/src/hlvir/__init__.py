"""Exact Hall-Littlewood vertex-operator algebra with Virasoro verification."""

__version__ = "0.1.0"
