"""Knot invariants behind monopole Lefschetz numbers of cyclic branched covers."""

__version__ = "0.1.0"
