"""Intersection graph of a framed chord diagram."""

from __future__ import annotations

from .diagrams import FramedChordDiagram
from .graphs import FramedGraph, canonical_graph
from .lincomb import LinComb


def interlaced(d: FramedChordDiagram, a: int, b: int) -> bool:
    """Chords a, b interlace iff exactly one endpoint of b lies between a's endpoints."""
    i, j = d.positions(a)
    return sum(1 for k in d.positions(b) if i < k < j) == 1


def intersection_graph(d: FramedChordDiagram) -> FramedGraph:
    n = d.order
    edges = tuple((a - 1, b - 1) for a in range(1, n + 1) for b in range(a + 1, n + 1)
                  if interlaced(d, a, b))
    return canonical_graph(FramedGraph(n, d.framing, edges))


def I_lincomb(v: LinComb) -> LinComb:
    return v.apply(intersection_graph)


def I_tensor(v: LinComb) -> LinComb:
    """(I x I) on a combination of pairs."""
    return v.apply(lambda kk: tuple(intersection_graph(k) for k in kk))
