"""Watts–Strogatz local clustering, kept exact as Fractions.

Decimal rendering happens only at the I/O boundary so that downstream
rank statistics never depend on float rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .graphs import Graph

__all__ = ["local_clustering", "average_local_clustering"]


def local_clustering(g: Graph, v: int) -> Fraction:
    """Edges among the neighbours of v over the pairs of neighbours.

    Vertices of degree 0 or 1 have no neighbour pair; they contribute 0,
    the usual network-science convention for the undefined 0/0 case.
    """
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} outside 0..{g.n - 1}")
    nb = g.adj[v]
    deg = nb.bit_count()
    if deg <= 1:
        return Fraction(0)
    links = 0
    mask = nb
    while mask:
        b = mask & -mask
        links += (g.adj[b.bit_length() - 1] & nb).bit_count()
        mask ^= b
    return Fraction(links // 2, deg * (deg - 1) // 2)


def average_local_clustering(g: Graph) -> Fraction:
    """Arithmetic mean of local_clustering over all vertices."""
    return sum((local_clustering(g, v) for v in range(g.n)), Fraction(0)) / g.n
