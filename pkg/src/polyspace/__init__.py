"""Exact-arithmetic invariants of the conjugation involution on planar
equilateral polygon spaces with an odd number of edges.

Everything here is integer or GF(2) arithmetic; no floating point is used
anywhere in a computation whose result is asserted.
"""

__version__ = "0.1.0"
