"""Exact fixed-point invariants of simplicial self-maps and traces over group rings."""

__version__ = "0.1.0"
