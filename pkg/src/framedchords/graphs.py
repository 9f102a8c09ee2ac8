"""Framed graphs and multigraphs: canonical labelling, enumeration, edits.

Vertices are 0-based indices internally; the text code is 1-based,
``n;f1...fn;u1-v1,u2-v2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_VERTICES = 10


class GraphFormatError(ValueError):
    pass


class GraphBoundError(ValueError):
    pass


def _norm_edge(u, v):
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, order=True)
class FramedGraph:
    """Simple graph with a framing bit per vertex (0 black, 1 white)."""

    n: int
    framing: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.framing) != self.n:
            raise GraphFormatError("framing length must equal vertex count")
        if any(b not in (0, 1) for b in self.framing):
            raise GraphFormatError("framing bits must be 0 or 1")
        norm = tuple(sorted(_norm_edge(u, v) for u, v in self.edges))
        for i, (u, v) in enumerate(norm):
            if not (0 <= u < v < self.n):
                raise GraphFormatError(f"bad edge {(u, v)} (loops and out-of-range not allowed)")
            if i and norm[i - 1] == (u, v):
                raise GraphFormatError(f"parallel edge {(u, v)}")
        if norm != self.edges:
            object.__setattr__(self, "edges", norm)

    @property
    def code(self) -> str:
        es = ",".join(f"{u + 1}-{v + 1}" for u, v in self.edges)
        return f"{self.n};{''.join(map(str, self.framing))};{es}"

    def __str__(self):
        return self.code

    @property
    def is_black(self) -> bool:
        return not any(self.framing)

    @property
    def is_white(self) -> bool:
        return all(self.framing)

    @property
    def n_white(self) -> int:
        return sum(self.framing)

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u, v) -> bool:
        return _norm_edge(u, v) in set(self.edges)

    def to_multigraph(self) -> "FramedMultigraph":
        return FramedMultigraph(self.n, self.framing, self.edges)


@dataclass(frozen=True, order=True)
class FramedMultigraph:
    """Framed graph whose edges form a multiset; loops allowed.

    Only the chromatic recursion produces these.
    """

    n: int
    framing: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.framing) != self.n:
            raise GraphFormatError("framing length must equal vertex count")
        norm = tuple(sorted(_norm_edge(u, v) for u, v in self.edges))
        for u, v in norm:
            if not (0 <= u and v < self.n):
                raise GraphFormatError(f"edge {(u, v)} out of range")
        object.__setattr__(self, "edges", norm)

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    @property
    def code(self) -> str:
        es = ",".join(f"{u + 1}-{v + 1}" for u, v in self.edges)
        return f"{self.n};{''.join(map(str, self.framing))};{es}"


EMPTY_GRAPH = FramedGraph(0, (), ())


def parse_graph(text: str) -> FramedGraph:
    """Parse a graph code; the result is canonical.

    Errors name the 1-based column of the offending field.
    """
    text = text.strip()
    parts = text.split(";")
    if len(parts) != 3:
        raise GraphFormatError(f"expected 'n;framing;edges', got {text!r}")
    if not parts[0].isdigit():
        raise GraphFormatError(f"bad vertex count {parts[0]!r} at column 1")
    n = int(parts[0])
    col = len(parts[0]) + 2
    for i, ch in enumerate(parts[1]):
        if ch not in "01":
            raise GraphFormatError(f"bad framing bit {ch!r} at column {col + i}")
    framing = tuple(int(ch) for ch in parts[1])
    col += len(parts[1]) + 1
    edges = []
    if parts[2]:
        for tok in parts[2].split(","):
            ends = tok.split("-")
            if len(ends) != 2 or not all(x.isdigit() for x in ends):
                raise GraphFormatError(f"bad edge {tok!r} at column {col}")
            u, v = (int(x) - 1 for x in ends)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphFormatError(f"edge {tok!r} at column {col} is a loop or out of range")
            edges.append(_norm_edge(u, v))
            col += len(tok) + 1
    return canonical_graph(FramedGraph(n, framing, tuple(edges)))


# -- canonical labelling ------------------------------------------------

def _refine(cells, W):
    """Equitable refinement of an ordered partition; isomorphism-invariant."""
    while True:
        new = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: (W[v][v],) + tuple(sum(W[v][u] for u in c) for c in cells) for v in cell}
            for key in sorted(set(sig.values())):
                new.append([v for v in cell if sig[v] == key])
        if len(new) == len(cells):
            return new
        cells = new


def _twins(u, v, W, n):
    if W[u][u] != W[v][v]:
        return False
    return all(W[u][w] == W[v][w] for w in range(n) if w != u and w != v)


def canonical_order(n, colors, W) -> tuple:
    """Canonical vertex order for a coloured weighted graph.

    Returns ``(order, code)``: ``order[i]`` is the original vertex placed at
    position i. Vertices are grouped by colour (ascending), the ordered
    partition is refined equitably, and the least upper-triangle code is
    taken over an individualisation tree. Interchangeable twin vertices are
    branched on only once.
    """
    if n == 0:
        return (), ()
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = [None, None]

    def search(cells):
        cells = _refine(cells, W)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = tuple(W[order[i]][order[j]] for i in range(n) for j in range(i, n))
            if best[1] is None or code < best[1]:
                best[0], best[1] = tuple(order), code
            return
        i = next(k for k, c in enumerate(cells) if len(c) > 1)
        reps = []
        for v in cells[i]:
            if not any(_twins(v, r, W, n) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [u for u in cells[i] if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search(cells)
    return best[0], best[1]


def _weights(n, edges):
    W = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u == v:
            W[u][u] += 1
        else:
            W[u][v] += 1
            W[v][u] += 1
    return W


def _relabelled_edges(order, edges):
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted(_norm_edge(pos[u], pos[v]) for u, v in edges))


def canonical_graph(g: FramedGraph, bound: int = MAX_VERTICES) -> FramedGraph:
    """Canonical representative; black vertices come first."""
    if g.n > bound:
        raise GraphBoundError(f"{g.n} vertices exceeds bound {bound}")
    order, _ = canonical_order(g.n, g.framing, _weights(g.n, g.edges))
    framing = tuple(g.framing[v] for v in order)
    return FramedGraph(g.n, framing, _relabelled_edges(order, g.edges))


def canonical_multigraph(g: FramedMultigraph, bound: int = MAX_VERTICES) -> FramedMultigraph:
    if g.n > bound:
        raise GraphBoundError(f"{g.n} vertices exceeds bound {bound}")
    order, _ = canonical_order(g.n, g.framing, _weights(g.n, g.edges))
    framing = tuple(g.framing[v] for v in order)
    return FramedMultigraph(g.n, framing, _relabelled_edges(order, g.edges))


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, framed: bool = True, bound: int = MAX_VERTICES) -> tuple:
    """All canonical framed (or all-black) graphs on ``n`` vertices, sorted.

    Built by adding one vertex, in every possible way, to each graph on
    ``n - 1`` vertices.
    """
    if n > bound:
        raise GraphBoundError(f"{n} vertices exceeds bound {bound}")
    if n == 0:
        return (EMPTY_GRAPH,)
    colours = (0, 1) if framed else (0,)
    seen = set()
    for base in enumerate_graphs(n - 1, framed, bound):
        for colour in colours:
            framing = base.framing + (colour,)
            for r in range(n):
                for nbrs in itertools.combinations(range(n - 1), r):
                    edges = base.edges + tuple((u, n - 1) for u in nbrs)
                    seen.add(canonical_graph(FramedGraph(n, framing, edges), bound))
    return tuple(sorted(seen))


# -- edits ----------------------------------------------------------------

def delete_edge(g, e) -> FramedMultigraph:
    """Remove one copy of edge ``e``."""
    m = g.to_multigraph() if isinstance(g, FramedGraph) else g
    e = _norm_edge(*e)
    edges = list(m.edges)
    try:
        edges.remove(e)
    except ValueError:
        raise KeyError(f"edge {e} not present") from None
    return FramedMultigraph(m.n, m.framing, tuple(edges))


def contract_edge(g, e, merged=None) -> FramedMultigraph:
    """Merge the endpoints of one copy of ``e``.

    The merged vertex is black iff both endpoints were black, unless
    ``merged(fu, fv)`` gives its framing explicitly. Remaining
    copies of ``e`` become loops; other incidences are kept, so parallel
    edges may appear.
    """
    m = g.to_multigraph() if isinstance(g, FramedGraph) else g
    u, v = _norm_edge(*e)
    if u == v:
        raise ValueError("cannot contract a loop")
    edges = list(m.edges)
    try:
        edges.remove((u, v))
    except ValueError:
        raise KeyError(f"edge {(u, v)} not present") from None
    # v merges into u, vertices above v shift down
    def rename(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    fu, fv = m.framing[u], m.framing[v]
    framing = list(m.framing)
    framing[u] = fu | fv if merged is None else merged(fu, fv)
    del framing[v]
    return FramedMultigraph(m.n - 1, tuple(framing), tuple(_norm_edge(rename(a), rename(b)) for a, b in edges))


def disjoint_union(g1: FramedGraph, g2: FramedGraph) -> FramedGraph:
    shift = g1.n
    edges = g1.edges + tuple((u + shift, v + shift) for u, v in g2.edges)
    return canonical_graph(FramedGraph(g1.n + g2.n, g1.framing + g2.framing, edges))


def induced_subgraph(g: FramedGraph, vertices) -> FramedGraph:
    keep = sorted(set(vertices))
    if any(not 0 <= v < g.n for v in keep):
        raise IndexError("vertex out of range")
    pos = {v: i for i, v in enumerate(keep)}
    edges = tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    return canonical_graph(FramedGraph(len(keep), tuple(g.framing[v] for v in keep), edges))


def complement_vertices(g: FramedGraph, vertices) -> tuple:
    s = set(vertices)
    return tuple(v for v in range(g.n) if v not in s)


def permute_graph(g: FramedGraph, perm) -> FramedGraph:
    """Relabel vertex ``v`` as ``perm[v]`` (no canonicalisation)."""
    framing = [0] * g.n
    for v in range(g.n):
        framing[perm[v]] = g.framing[v]
    edges = tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in g.edges))
    return FramedGraph(g.n, tuple(framing), edges)
