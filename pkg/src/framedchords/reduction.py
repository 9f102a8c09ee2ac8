"""Rewriting framed diagrams and graphs as sums of black-by-white products.

Each rewrite step applies one 4T relation. A measure of complexity
strictly decreases along every branch, which both proves termination and
is asserted at run time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .diagrams import FramedChordDiagram, canonicalize, diagram_from_word
from .graphs import FramedGraph, canonical_graph, disjoint_union, induced_subgraph
from .hopf import m_M
from .lincomb import LinComb, key_code
from .relations import _drop_edge, _toggle


class ComplexityError(AssertionError):
    pass


@dataclass
class Step:
    before: Fraction
    after: Fraction
    relation: str


@dataclass
class ReductionTrace:
    """Rewrite history of one input.

    ``factors`` maps ``(black, white)`` factor pairs to coefficients;
    :attr:`output` is the corresponding combination of products.
    """

    input: object
    steps: list = field(default_factory=list)
    factors: LinComb = field(default_factory=LinComb)
    kind: str = "diagram"

    @property
    def output(self) -> LinComb:
        if self.kind == "diagram":
            return self.factors.apply(lambda bw: m_M(bw[0], bw[1]))
        return self.factors.apply(lambda bw: disjoint_union(bw[0], bw[1]))

    def to_text(self) -> str:
        lines = [f"{s.before} -> {s.after} : {s.relation}" for s in self.steps]
        out = self.output.to_text()
        if out:
            lines.append(out)
        return "\n".join(lines)


# -- chord diagrams ------------------------------------------------------------
# Diagrams inside the recursion are kept as (word, framing-by-label) with the
# base point fixed before word[0]; they are only canonicalised at the leaves.

def remoteness(d: FramedChordDiagram, p: int, h: int) -> int:
    """Disorienting endpoints met walking forward from position ``h`` to point ``p``.

    ``p`` is a gap index: the point just before ``d.word[p]`` (``p == 0``
    and ``p == 2n`` both denote the gap before the first position).
    """
    return _remoteness(d.word, d.frame, p, h)


def _remoteness(word, frame, p, h):
    if frame(word[h]) != 0:
        raise ValueError(f"position {h} is not an endpoint of an oriented chord")
    m = len(word)
    count = 0
    i = (h + 1) % m
    while i != p % m:
        if frame(word[i]):
            count += 1
        i = (i + 1) % m
    return count


def _diagram_complexity(word, frame, p=0) -> Fraction:
    labels = set(word)
    b = sum(1 for k in labels if frame(k) == 0)
    w = len(labels) - b
    if b == 0 or w == 0:
        return Fraction(0)
    total = sum(_remoteness(word, frame, p, h) for h, x in enumerate(word) if frame(x) == 0)
    return Fraction(5 ** b * factorial(b - 1), factorial(w)) * total


def complexity_diagram(d: FramedChordDiagram, p: int = 0) -> Fraction:
    """``5^b (b-1)!/w! * sum of remoteness`` over oriented endpoints.

    Monochrome diagrams have complexity 0 by convention.
    """
    return _diagram_complexity(d.word, d.frame, p)


def _split_black_white(word, frame):
    black = [x for x in word if frame(x) == 0]
    white = [x for x in word if frame(x) == 1]
    return diagram_from_word(black, frame), diagram_from_word(white, frame)


def reduce_diagram(d: FramedChordDiagram) -> ReductionTrace:
    """Write ``d`` as a combination of products ``black * white``.

    The base point sits before the first position of the canonical code.
    While some oriented endpoint is directly followed by a disorienting
    endpoint, it is moved past that endpoint with the disorienting-chord
    relation; the other two terms of the relation have one oriented chord
    fewer.
    """
    trace = ReductionTrace(d, kind="diagram")
    acc: dict = {}

    def rec(word, framing, coeff):
        frame = framing.__getitem__
        c0 = _diagram_complexity(word, frame)
        if c0 == 0:
            key = _split_black_white(word, frame)
            acc[key] = acc.get(key, 0) + coeff
            return
        m = len(word)
        h = next(i for i in range(m - 1) if frame(word[i]) == 0 and frame(word[i + 1]) == 1)
        a, b = word[h], word[h + 1]
        # D(h before B) = D(h after B) - D'(h after B') + D'(h before B')
        rest = list(word[:h] + word[h + 1:])
        j_near = h  # B now sits at index h of rest
        j_far = next(i for i, x in enumerate(rest) if x == b and i != j_near)
        flipped = dict(framing)
        flipped[a] ^= 1

        def place(i):
            return tuple(rest[:i] + [a] + rest[i:])

        children = [
            (place(j_near + 1), framing, coeff),
            (place(j_far + 1), flipped, -coeff),
            (place(j_far), flipped, coeff),
        ]
        rel = f"4T(b) on {diagram_from_word(word, frame).code} jump={a} fixed={b}"
        for cw, cf, cc in children:
            c1 = _diagram_complexity(cw, cf.__getitem__)
            if not c1 < c0:
                raise ComplexityError(f"complexity did not drop: {c0} -> {c1} ({rel})")
            trace.steps.append(Step(c0, c1, rel))
            rec(cw, cf, cc)

    framing = {k: d.frame(k) for k in range(1, d.order + 1)}
    rec(d.word, framing, Fraction(1))
    trace.factors = LinComb(acc)
    return trace


# -- graphs --------------------------------------------------------------------

def _mixed_edges(g: FramedGraph):
    return [(u, v) for u, v in g.edges if g.framing[u] != g.framing[v]]


def complexity_graph(g: FramedGraph) -> Fraction:
    """``2^b (b-1)!/w! * #edges joining vertices of different framing``."""
    w = g.n_white
    b = g.n - w
    if b == 0 or w == 0:
        return Fraction(0)
    return Fraction(2 ** b * factorial(b - 1), factorial(w)) * len(_mixed_edges(g))


def _split_graph(g: FramedGraph):
    black = [v for v in range(g.n) if g.framing[v] == 0]
    white = [v for v in range(g.n) if g.framing[v] == 1]
    return induced_subgraph(g, black), induced_subgraph(g, white)


def reduce_graph(g: FramedGraph) -> ReductionTrace:
    """Graph analogue of :func:`reduce_diagram`.

    A mixed edge ``uv`` (u black, v white) is removed with
    ``G = G'_uv - G~_uv + G~'_uv``; the tilde graphs have u turned white.
    """
    trace = ReductionTrace(g, kind="graph")
    acc: dict = {}

    def rec(h: FramedGraph, coeff):
        c0 = complexity_graph(h)
        if c0 == 0:
            key = _split_graph(h)
            acc[key] = acc.get(key, 0) + coeff
            return
        u, v = _mixed_edges(h)[0]
        if h.framing[u] == 1:
            u, v = v, u
        tilde = _toggle(h, u, v, True)
        children = [
            (_drop_edge(h, u, v), coeff),
            (tilde, -coeff),
            (_drop_edge(tilde, u, v), coeff),
        ]
        rel = f"4T on {canonical_graph(h).code} u={u + 1} v={v + 1}"
        for child, cc in children:
            c1 = complexity_graph(child)
            if not c1 < c0:
                raise ComplexityError(f"complexity did not drop: {c0} -> {c1} ({rel})")
            trace.steps.append(Step(c0, c1, rel))
            rec(child, cc)

    rec(canonical_graph(g), Fraction(1))
    trace.factors = LinComb(acc)
    return trace


def is_black_white_split(pair) -> bool:
    black, white = pair
    return black.is_black and white.is_white


def factor_codes(trace: ReductionTrace) -> list:
    return [key_code(k) for k in trace.factors]
