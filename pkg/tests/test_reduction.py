from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from framedchords.diagrams import FramedChordDiagram, canonicalize, enumerate_diagrams, parse_diagram
from framedchords.graphs import canonical_graph, enumerate_graphs, parse_graph
from framedchords.lincomb import LinComb
from framedchords.linalg import Quotient
from framedchords.reduction import (complexity_diagram, complexity_graph, factor_codes,
                                    is_black_white_split, reduce_diagram, reduce_graph, remoteness)
from framedchords.relations import relation_set

from strategies import diagrams, graphs

P = parse_diagram


def test_remoteness_black_diagram():
    d = P("1 2 1 2;00")
    assert all(remoteness(d, 0, h) == 0 for h in range(4))


def test_remoteness_hand_walk():
    d = P("1 2 1 2;01")  # chord 1 oriented at positions 0 and 2
    assert remoteness(d, 0, 0) == 2   # passes both endpoints of chord 2
    assert remoteness(d, 0, 2) == 1   # passes the last endpoint only
    assert remoteness(d, 3, 2) == 0   # p right after h


def test_remoteness_rejects_disorienting_endpoint():
    with pytest.raises(ValueError):
        remoteness(P("1 2 1 2;01"), 0, 1)


def test_complexity_zero_cases():
    assert complexity_diagram(P("1 2 1 2;00")) == 0
    assert complexity_diagram(P("1 1 2 2;11")) == 0
    # reading from the base point, every disorienting endpoint comes first,
    # so walking forward from an oriented endpoint reaches p without meeting one
    assert complexity_diagram(FramedChordDiagram((1, 1, 2, 2), (1, 0))) == 0
    assert complexity_diagram(FramedChordDiagram((1, 1, 2, 2), (0, 1))) == 20


def test_minimal_nonzero_complexity():
    for n in range(2, 5):
        for d in enumerate_diagrams(n):
            b = d.framing.count(0)
            w = n - b
            c = complexity_diagram(d)
            if c:
                assert c >= Fraction(5 ** b * factorial(b - 1), factorial(w))
                assert c % Fraction(5 ** b * factorial(b - 1), factorial(w)) == 0


def test_monochrome_diagrams_reduce_to_themselves():
    for code in ("1 2 1 2;00", "1 2 1 2;11", ";"):
        d = P(code)
        t = reduce_diagram(d)
        assert not t.steps
        assert t.output == LinComb.basis(d)


def test_monochrome_graphs_reduce_to_themselves():
    for code in ("3;000;1-2,2-3", "2;11;1-2"):
        g = parse_graph(code)
        t = reduce_graph(g)
        assert not t.steps and t.output == LinComb.basis(g)


def test_graph_complexity():
    assert complexity_graph(parse_graph("3;000;1-2,2-3")) == 0
    assert complexity_graph(parse_graph("2;01;1-2")) == 2


def _sound(space, n, items, reduce):
    rs = relation_set(space, n)
    q = Quotient(rs.basis, rs.vectors)
    for x in items:
        t = reduce(x)
        assert all(is_black_white_split(k) for k in t.factors), x.code
        assert q.is_zero(LinComb.basis(x) - t.output), x.code
        for s in t.steps:
            assert s.after < s.before


def test_crossing_pair_example():
    _sound("M", 2, [P("1 2 1 2;01")], reduce_diagram)


def test_black_white_edge_example():
    t = reduce_graph(parse_graph("2;01;1-2"))
    assert len(t.steps) == 3
    _sound("H", 2, [parse_graph("2;01;1-2")], reduce_graph)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_diagram_soundness(n):
    _sound("M", n, enumerate_diagrams(n), reduce_diagram)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_graph_soundness(n):
    _sound("H", n, enumerate_graphs(n), reduce_graph)


# The relation flips the moved chord (vertex) to white, so output terms can
# have more white chords than the input, never fewer, and the same order.

@given(diagrams(max_order=5))
def test_output_bidegrees(d):
    d = canonicalize(d)
    w = d.order - d.framing.count(0)
    for black, white in reduce_diagram(d).factors:
        assert black.is_black and white.is_white
        assert black.order + white.order == d.order
        assert white.order >= w


@given(graphs(max_n=6))
def test_graph_output_bidegrees(g):
    g = canonical_graph(g)
    for black, white in reduce_graph(g).factors:
        assert black.is_black and white.is_white
        assert black.n + white.n == g.n
        assert white.n >= g.n_white


def test_trace_text_format():
    t = reduce_diagram(P("1 2 1 2;01"))
    lines = t.to_text().splitlines()
    assert " -> " in lines[0] and " : " in lines[0]
    assert factor_codes(t)
    assert all("\t" in line for line in lines[len(t.steps):])
