"""Invariants of links under 5-moves."""

__version__ = "0.1.0"
