"""Algebra, coalgebra and (co)module structure maps on A, M, G and H.

Space tags: ``"A"`` chord diagrams, ``"M"`` framed chord diagrams, ``"G"``
graphs, ``"H"`` framed graphs. A and G are the all-black parts of M and H;
the inclusions are the identity on basis elements. Tensor terms are tuples
of basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .chromatic import BivarPoly
from .diagrams import (EMPTY_DIAGRAM, FramedChordDiagram, canonicalize, chord_subsets,
                       remove_chords, subdiagram)
from .graphs import EMPTY_GRAPH, FramedGraph, complement_vertices, disjoint_union, induced_subgraph
from .intersection import intersection_graph
from .lincomb import LinComb, as_lincomb, lincomb_sum

DIAGRAM_SPACES = ("A", "M")
GRAPH_SPACES = ("G", "H")


class NotBlackError(ValueError):
    pass


def _is_diagram_space(tag: str) -> bool:
    if tag in DIAGRAM_SPACES:
        return True
    if tag in GRAPH_SPACES:
        return False
    raise ValueError(f"unknown space tag {tag!r}")


def empty(tag: str):
    return EMPTY_DIAGRAM if _is_diagram_space(tag) else EMPTY_GRAPH


# -- products ----------------------------------------------------------------

def glue(c: FramedChordDiagram, d: FramedChordDiagram) -> FramedChordDiagram:
    """Cut both circles just before their first code position and join arcs."""
    shift = c.order
    word = c.word + tuple(x + shift for x in d.word)
    return canonicalize(FramedChordDiagram(word, c.framing + d.framing))


def _require_black(x, what="left factor"):
    if not x.is_black:
        raise NotBlackError(f"{what} {x.code} is not black")


def m_A(c1: FramedChordDiagram, c2: FramedChordDiagram) -> FramedChordDiagram:
    _require_black(c1)
    _require_black(c2, "right factor")
    return glue(c1, c2)


def m_M(c: FramedChordDiagram, d: FramedChordDiagram) -> FramedChordDiagram:
    """Product of a black diagram by a framed one."""
    _require_black(c)
    return glue(c, d)


def m_G(g1: FramedGraph, g2: FramedGraph) -> FramedGraph:
    _require_black(g1)
    _require_black(g2, "right factor")
    return disjoint_union(g1, g2)


def m_H(g1: FramedGraph, g2: FramedGraph) -> FramedGraph:
    return disjoint_union(g1, g2)


_PRODUCTS = {"A": m_A, "M": m_M, "G": m_G, "H": m_H}


def multiply(tag: str, u, v) -> LinComb:
    """Bilinear extension of the product of space ``tag``.

    For ``M`` the left argument must be black (the A-module action).
    """
    f = _PRODUCTS[tag]
    u, v = as_lincomb(u), as_lincomb(v)
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            k = f(a, b)
            out[k] = out.get(k, 0) + ca * cb
    return LinComb(out)


# -- coproducts --------------------------------------------------------------

def _splits(x, parts):
    """Yield ``(x_I, x_J)`` over subsets I of ``parts`` (J its complement)."""
    if isinstance(x, FramedChordDiagram):
        for sub in chord_subsets(parts):
            yield subdiagram(x, sub), remove_chords(x, sub)
    else:
        for sub in chord_subsets(parts):
            yield induced_subgraph(x, sub), induced_subgraph(x, complement_vertices(x, sub))


def _all_parts(x):
    if isinstance(x, FramedChordDiagram):
        return range(1, x.order + 1)
    return range(x.n)


def _black_parts(x):
    if isinstance(x, FramedChordDiagram):
        return x.oriented_chords()
    return tuple(v for v in range(x.n) if x.framing[v] == 0)


def _coproduct_basis(x) -> LinComb:
    out: dict = {}
    for pair in _splits(x, _all_parts(x)):
        out[pair] = out.get(pair, 0) + 1
    return LinComb(out)


def Delta(tag: str, x) -> LinComb:
    """Sum of ``x_I (x) x_J`` over all splits of the chords (vertices)."""
    _is_diagram_space(tag)
    return as_lincomb(x).apply(_coproduct_basis)


def Pr(tag: str, v) -> LinComb:
    """Projection keeping only black basis terms."""
    _is_diagram_space(tag)
    return as_lincomb(v).filter(lambda k: k.is_black)


def _comodule_basis(x) -> LinComb:
    out: dict = {}
    for pair in _splits(x, _black_parts(x)):
        out[pair] = out.get(pair, 0) + 1
    return LinComb(out)


def delta_comodule(tag: str, x) -> LinComb:
    """Coaction ``(Pr (x) id) o Delta``: splits over subsets of black parts only."""
    _is_diagram_space(tag)
    return as_lincomb(x).apply(_comodule_basis)


def discolor(d: FramedChordDiagram) -> LinComb:
    zeroed = canonicalize(FramedChordDiagram(d.word, (0,) * d.order))
    return LinComb.basis(zeroed, -1 if d.n_disorienting % 2 else 1)


def D_M(v) -> LinComb:
    """Discoloration: zero all framings, sign ``(-1)^#disorienting``."""
    return as_lincomb(v).apply(discolor)


def tensor_map(v: LinComb, left: Callable | None = None, right: Callable | None = None) -> LinComb:
    """Apply linear maps (key -> LinComb/key/None) to the legs of pair terms."""
    def on_pair(kk):
        a, b = kk
        la = as_lincomb(a) if left is None else as_lincomb_or_zero(left(a))
        rb = as_lincomb(b) if right is None else as_lincomb_or_zero(right(b))
        return la.tensor(rb)
    return v.apply(on_pair)


def as_lincomb_or_zero(x) -> LinComb:
    if x is None:
        return LinComb()
    return as_lincomb(x)


def delta_prime_M(x) -> LinComb:
    """``(D_M (x) id) o Delta_M``."""
    return tensor_map(Delta("M", x), left=discolor)


def counit(tag: str, v) -> Fraction:
    return as_lincomb(v)[empty(tag)]


def unit(tag: str, scalar=1) -> LinComb:
    return LinComb.basis(empty(tag), scalar)


def flatten3(v: LinComb) -> LinComb:
    """Re-associate nested pair terms into flat triples."""
    def flat(kk):
        out = []
        for k in kk:
            out.extend(k if isinstance(k, tuple) else (k,))
        return tuple(out)
    return v.apply(flat)


# -- antipode ------------------------------------------------------------------

_ANTIPODE: dict = {}


def _antipode_basis(g: FramedGraph) -> LinComb:
    hit = _ANTIPODE.get(g)
    if hit is not None:
        return hit
    if g.n == 0:
        result = LinComb.basis(g)
    else:
        result = -LinComb.basis(g)
        for left, right in _splits(g, range(g.n)):
            if 0 < left.n < g.n:
                result = result - multiply("H", _antipode_basis(left), right)
    _ANTIPODE[g] = result
    return result


def antipode_H(v) -> LinComb:
    """Antipode of the graph Hopf algebra, by the connected graded recursion
    ``S(x) = -x - sum S(x_I) x_J`` over proper nonempty splits."""
    return as_lincomb(v).apply(_antipode_basis)


# -- module structure on the tensor product ----------------------------------

def m_tensor(tag: str, c, v: LinComb) -> LinComb:
    """Action of black ``c`` on ``H (x) V``: ``sum (c1 h) (x) (c2 x)``.

    ``tag`` is the module space, ``"M"`` (acted on by A) or ``"H"``
    (acted on by G).
    """
    if tag == "M":
        alg, mod = "A", "M"
    elif tag == "H":
        alg, mod = "G", "H"
    else:
        raise ValueError("m_tensor is defined for module spaces M and H")
    c = as_lincomb(c)
    for k in c:
        _require_black(k)
    parts = []
    for (c1, c2), cc in Delta(alg, c).items():
        for (h, x), cv in v.items():
            parts.append(multiply(alg, c1, h).tensor(multiply(mod, c2, x)) * (cc * cv))
    return lincomb_sum(parts)


# -- weight systems ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Monomial:
    """Opaque target-basis key for a monomial ``x^a y^b`` (or a scalar)."""

    a: int
    b: int

    @property
    def code(self) -> str:
        if not self.a and not self.b:
            return "1"
        parts = []
        if self.a:
            parts.append("x" if self.a == 1 else f"x^{self.a}")
        if self.b:
            parts.append("y" if self.b == 1 else f"y^{self.b}")
        return "*".join(parts)


def value_as_lincomb(value) -> LinComb:
    if isinstance(value, LinComb):
        return value
    if isinstance(value, BivarPoly):
        return LinComb({Monomial(a, b): c for (a, b), c in value.terms.items()})
    return LinComb.basis(Monomial(0, 0), value)


def tensor_values(a, b) -> LinComb:
    return value_as_lincomb(a).tensor(value_as_lincomb(b))


class WeightSystem:
    """Linear map from a space of diagrams or graphs to a target module.

    ``evaluate`` gives the value on one basis element; values are Fractions,
    BivarPoly or LinComb.
    """

    def __init__(self, domain: str, evaluate: Callable, name: str = ""):
        _is_diagram_space(domain)
        self.domain = domain
        self.evaluate = evaluate
        self.name = name

    def __call__(self, x):
        if not isinstance(x, LinComb):
            return self.evaluate(x)
        total = None
        for k, c in x.items():
            term = self.evaluate(k) * c
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def vanishes_on(self, relations) -> bool:
        return all(not self(v) for v in relations.vectors)

    def __repr__(self):
        return f"WeightSystem({self.domain}, {self.name or self.evaluate!r})"


def counit_weight(tag: str) -> WeightSystem:
    e = empty(tag)
    return WeightSystem(tag, lambda k: Fraction(1 if k == e else 0), f"counit_{tag}")


def convolution_weight(w: WeightSystem, w2: WeightSystem, combine: Callable = tensor_values) -> WeightSystem:
    """``d -> sum w(l) (x) w2(r)`` over the coaction terms ``l (x) r`` of d."""
    if w.domain != "A" or w2.domain != "M":
        raise ValueError("convolution expects a weight system on A and one on M")

    def evaluate(d):
        total = None
        for (left, right), c in delta_comodule("M", d).items():
            term = combine(w(left), w2(right)) * c
            total = term if total is None else total + term
        return total
    return WeightSystem("M", evaluate, f"({w.name} * {w2.name})")


def weight_from_discoloration(w: WeightSystem) -> WeightSystem:
    if w.domain != "A":
        raise ValueError("discoloration lift expects a weight system on A")
    return WeightSystem("M", lambda d: w(D_M(d)), f"{w.name} o D_M")


def weight_from_graph_map(phi: Callable) -> WeightSystem:
    """``phi o I`` for a linear map ``phi`` on framed graphs."""
    return WeightSystem("M", lambda d: phi(intersection_graph(d)), f"{getattr(phi, '__name__', 'phi')} o I")
