"""Four-term relation vectors for framed chord diagrams and framed graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .diagrams import FramedChordDiagram, diagram_from_word, enumerate_diagrams
from .graphs import FramedGraph, canonical_graph, enumerate_graphs
from .lincomb import LinComb, key_code
from .linalg import SparseExactMatrix


@dataclass
class RelationSet:
    """Relation vectors of one order, over the canonical basis of that order.

    ``generated`` counts emitted vectors before zero removal and dedup;
    ``type_counts`` splits the surviving vectors by relation family.
    """

    order: int
    kind: str          # "diagram" or "graph"
    framed: bool
    basis: tuple
    vectors: list
    generated: int = 0
    type_counts: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.vectors)

    def matrix(self) -> SparseExactMatrix:
        return SparseExactMatrix.from_vectors(self.vectors, self.basis)

    def export(self, path) -> tuple:
        """Write ``<path>`` (sparse triplets) and ``<path>.index`` (column codes)."""
        path = Path(path)
        m = self.matrix()
        path.write_text(m.to_triplets())
        index = path.with_name(path.name + ".index")
        index.write_text(m.index_text())
        return path, index


def _dedup_key(v: LinComb):
    items = sorted(v.items(), key=lambda kv: key_code(kv[0]))
    lead = items[0][1]
    return tuple((k, c / lead) for k, c in items)


class _Collector:
    def __init__(self):
        self.vectors: list = []
        self.seen: set = set()
        self.generated = 0
        self.type_counts: dict = {}

    def emit(self, terms, family: str):
        self.generated += 1
        v = LinComb(terms)
        if not v:
            return
        key = _dedup_key(v)
        if key in self.seen:
            return
        self.seen.add(key)
        self.vectors.append(v)
        self.type_counts[family] = self.type_counts.get(family, 0) + 1


# -- graphs ----------------------------------------------------------------

def _toggle(g: FramedGraph, u: int, v: int, framed: bool) -> FramedGraph:
    """Toggle u's adjacency to every other neighbour of v; u gets f(u)+f(v)."""
    adj = g.adjacency()
    edges = set(g.edges)
    for w in adj[v]:
        if w == u:
            continue
        e = (min(u, w), max(u, w))
        if e in edges:
            edges.remove(e)
        else:
            edges.add(e)
    framing = list(g.framing)
    if framed:
        framing[u] = (g.framing[u] + g.framing[v]) % 2
    return FramedGraph(g.n, tuple(framing), tuple(edges))


def _drop_edge(g: FramedGraph, u: int, v: int) -> FramedGraph:
    e = (min(u, v), max(u, v))
    return FramedGraph(g.n, g.framing, tuple(x for x in g.edges if x != e))


def graph_4t_terms(g: FramedGraph, u: int, v: int, framed: bool = True) -> list:
    """Terms of ``G - G'_uv - s*(G~_uv - G~'_uv)`` with ``s = (-1)^f(v)``."""
    s = -1 if (framed and g.framing[v]) else 1
    tilde = _toggle(g, u, v, framed)
    return [
        (canonical_graph(g), 1),
        (canonical_graph(_drop_edge(g, u, v)), -1),
        (canonical_graph(tilde), -s),
        (canonical_graph(_drop_edge(tilde, u, v)), s),
    ]


@lru_cache(maxsize=None)
def fourT_graph_relations(n: int, framed: bool = True) -> RelationSet:
    basis = enumerate_graphs(n, framed)
    out = _Collector()
    for g in basis:
        for a, b in g.edges:
            for u, v in ((a, b), (b, a)):
                out.emit(graph_4t_terms(g, u, v, framed), "graph")
    return RelationSet(n, "graph", framed, basis, out.vectors, out.generated, out.type_counts)


# -- chord diagrams --------------------------------------------------------

def slide_placements(d: FramedChordDiagram, h: int, b: int) -> dict:
    """The four words obtained by re-inserting endpoint ``h`` next to chord ``b``.

    ``h`` is a position in ``d.word``; the endpoint is removed and placed
    immediately before / after each endpoint of ``b``. Keys are
    ``"before1", "after1", "before2", "after2"`` with endpoint 1 the first
    occurrence of ``b`` in the shortened word.
    """
    a = d.word[h]
    rest = list(d.word[:h] + d.word[h + 1:])
    b1, b2 = (i for i, x in enumerate(rest) if x == b)

    def place(i):
        return tuple(rest[:i] + [a] + rest[i:])

    return {"before1": place(b1), "after1": place(b1 + 1),
            "before2": place(b2), "after2": place(b2 + 1)}


def diagram_4t_terms(d: FramedChordDiagram, h: int, b: int) -> list:
    """One four-term relation, as ``[(diagram, coeff), ...]``.

    The jumping chord ``a`` owns the endpoint at position ``h``; ``b`` is
    the fixed chord. With ``b`` oriented the classical relation is used
    with every framing unchanged::

        D(after1) - D(before1) = D(before2) - D(after2)

    With ``b`` disorienting, sliding along ``b`` lands on the opposite side
    of its far endpoint and flips the framing of ``a``::

        D(after1) - D(before1) = D'(after2) - D'(before2)

    where ``D'`` carries the flipped framing of ``a``.
    """
    a = d.word[h]
    if a == b:
        raise ValueError("jumping and fixed chord must differ")
    words = slide_placements(d, h, b)
    frame = {k: d.frame(k) for k in range(1, d.order + 1)}
    flipped = dict(frame)
    flipped[a] ^= 1
    if frame[b] == 0:
        return [
            (diagram_from_word(words["after1"], frame), 1),
            (diagram_from_word(words["before1"], frame), -1),
            (diagram_from_word(words["before2"], frame), -1),
            (diagram_from_word(words["after2"], frame), 1),
        ]
    return [
        (diagram_from_word(words["after1"], frame), 1),
        (diagram_from_word(words["before1"], frame), -1),
        (diagram_from_word(words["after2"], flipped), -1),
        (diagram_from_word(words["before2"], flipped), 1),
    ]


@lru_cache(maxsize=None)
def fourT_diagram_relations(n: int, framed: bool = True) -> RelationSet:
    """All 4T vectors of order ``n``.

    For every basis diagram, every endpoint ``h`` and every chord ``b`` of
    another label sitting next to ``h`` on the circle, one vector is
    emitted. Families: ``"a"`` (fixed chord oriented) and ``"b"`` (fixed
    chord disorienting).
    """
    basis = enumerate_diagrams(n, framed)
    out = _Collector()
    for d in basis:
        m = len(d.word)
        for h, a in enumerate(d.word):
            neighbours = {d.word[(h - 1) % m], d.word[(h + 1) % m]}
            for b in sorted(neighbours - {a}):
                family = "b" if d.frame(b) else "a"
                out.emit(diagram_4t_terms(d, h, b), family)
    return RelationSet(n, "diagram", framed, basis, out.vectors, out.generated, out.type_counts)


def relation_set(space: str, n: int) -> RelationSet:
    """Relations for space tag ``A``, ``M``, ``G`` or ``H``."""
    if space == "A":
        return fourT_diagram_relations(n, False)
    if space == "M":
        return fourT_diagram_relations(n, True)
    if space == "G":
        return fourT_graph_relations(n, False)
    if space == "H":
        return fourT_graph_relations(n, True)
    raise ValueError(f"unknown space {space!r}")


def chain_equality_count(rs: RelationSet) -> int:
    """Distinct relations counted as equalities of the drawn relation chains.

    A type-(a) picture is one equality; a type-(b) picture is a chain of two
    equalities. Used only to compare against published relation counts.
    """
    return rs.type_counts.get("a", 0) + 2 * rs.type_counts.get("b", 0)
