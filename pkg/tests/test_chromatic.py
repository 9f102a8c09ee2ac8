import random

import pytest
from hypothesis import given, strategies as st

from framedchords.chromatic import (BLACK_MERGE, LITERAL, PRODUCT_SIGN, RULES, BivarPoly,
                                    chromatic_on_lincomb, classical_chromatic_oracle, collapse_parallel,
                                    framed_chromatic, framed_chromatic_ordered, poly_coproduct,
                                    poly_eval, poly_mul)
from framedchords.diagrams import chord_subsets
from framedchords.graphs import (EMPTY_GRAPH, FramedGraph, FramedMultigraph, canonical_graph,
                                 complement_vertices, disjoint_union, enumerate_graphs,
                                 induced_subgraph, parse_graph)
from framedchords.relations import relation_set

from strategies import graphs

CONSISTENT = [PRODUCT_SIGN, BLACK_MERGE]


def test_base_cases():
    assert framed_chromatic(EMPTY_GRAPH) == 1
    assert str(framed_chromatic(parse_graph("1;1;"))) == "y"
    assert str(framed_chromatic(parse_graph("1;0;"))) == "x"


def test_black_pair():
    assert str(framed_chromatic(parse_graph("2;00;1-2"))) == "x^2 - x"


def test_black_white_pair():
    assert str(framed_chromatic(parse_graph("2;01;1-2"))) == "x*y + y"


def test_black_triangle():
    assert str(framed_chromatic(parse_graph("3;000;1-2,1-3,2-3"))) == "x^3 - 3*x^2 + 2*x"


def test_loops_vanish():
    assert framed_chromatic(FramedMultigraph(2, (0, 1), ((0, 0), (0, 1)))) == 0


def test_oracle_examples():
    k3 = parse_graph("3;000;1-2,1-3,2-3")
    assert classical_chromatic_oracle(k3, 3) == 6
    assert classical_chromatic_oracle(parse_graph("2;00;"), 2) == 4
    assert classical_chromatic_oracle(parse_graph("4;0000;1-2,2-3,3-4,1-4"), 2) == 2


def test_oracle_rejects_framed():
    with pytest.raises(ValueError):
        classical_chromatic_oracle(parse_graph("1;1;"), 2)


def test_polynomial_format():
    p = BivarPoly({(2, 0): 1, (1, 0): -1, (0, 0): 3, (1, 1): -2, (0, 2): 5})
    assert str(p) == "x^2 - 2*x*y + 5*y^2 - x + 3"
    assert str(BivarPoly()) == "0"
    assert str(-BivarPoly.monomial(0, 1)) == "-y"


def test_poly_arithmetic():
    x, y = BivarPoly.monomial(1, 0), BivarPoly.monomial(0, 1)
    p = poly_mul(x + y, x - y)
    assert p == BivarPoly({(2, 0): 1, (0, 2): -1})
    assert poly_eval(p, 3, 2) == 5
    assert poly_coproduct(x * y) == {((1, 1), (0, 0)): 1, ((1, 0), (0, 1)): 1,
                                     ((0, 1), (1, 0)): 1, ((0, 0), (1, 1)): 1}


def test_classical_restriction_up_to_six():
    for n in range(7):
        for g in enumerate_graphs(n, framed=False):
            p = framed_chromatic(g)
            for k in range(n + 2):
                assert poly_eval(p, x=k) == classical_chromatic_oracle(g, k)


@pytest.mark.parametrize("rule", list(RULES.values()), ids=list(RULES))
def test_rules_agree_on_black_graphs(rule):
    for g in enumerate_graphs(5, framed=False):
        assert framed_chromatic(g, rule) == framed_chromatic(g, LITERAL)


def test_literal_rule_depends_on_edge_order():
    """The rule as usually stated: resolving b-b before b-w differs from b-w first."""
    path = parse_graph("3;001;1-2,2-3")  # black - black - white
    bb_first = framed_chromatic_ordered(path, (0, 1))
    bw_first = framed_chromatic_ordered(path, (1, 0))
    assert str(bb_first) == "x^2*y - y"
    assert str(bw_first) == "x^2*y + y"


@pytest.mark.parametrize("rule", CONSISTENT, ids=[r.name for r in CONSISTENT])
def test_consistent_rules_order_independent(rule):
    rng = random.Random(1)
    for n in range(5):
        for g in enumerate_graphs(n):
            p = framed_chromatic(g, rule)
            for _ in range(10):
                pr = list(range(len(g.edges)))
                rng.shuffle(pr)
                assert framed_chromatic_ordered(g, pr, rule) == p


@pytest.mark.parametrize("rule", CONSISTENT, ids=[r.name for r in CONSISTENT])
def test_consistent_rules_vanish_on_4t(rule):
    for n in range(2, 5):
        for v in relation_set("H", n).vectors:
            assert not chromatic_on_lincomb(v, rule)


def test_literal_rule_does_not_vanish_on_4t():
    bad = [v for v in relation_set("H", 3).vectors if chromatic_on_lincomb(v)]
    assert bad


def test_variant_values_on_black_white_pair():
    g = parse_graph("2;01;1-2")
    assert str(framed_chromatic(g, PRODUCT_SIGN)) == "x*y - y"
    assert str(framed_chromatic(g, BLACK_MERGE)) == "x*y + x"
    assert str(framed_chromatic(g, "black-merge")) == "x*y + x"


@pytest.mark.parametrize("rule", list(RULES.values()), ids=list(RULES))
def test_degree_and_leading_term(rule):
    for n in range(6):
        for g in enumerate_graphs(n):
            p = framed_chromatic(g, rule)
            assert p.total_degree() == (n if n else 0)
            assert p.coefficient(n - g.n_white, g.n_white) == 1


@pytest.mark.parametrize("rule", list(RULES.values()), ids=list(RULES))
def test_hopf_morphism(rule):
    for n in range(5):
        for g in enumerate_graphs(n):
            lhs = {}
            for sub in chord_subsets(range(n)):
                a = framed_chromatic(induced_subgraph(g, sub), rule)
                b = framed_chromatic(induced_subgraph(g, complement_vertices(g, sub)), rule)
                for m1, c1 in a.terms.items():
                    for m2, c2 in b.terms.items():
                        lhs[(m1, m2)] = lhs.get((m1, m2), 0) + c1 * c2
            assert {k: c for k, c in lhs.items() if c} == poly_coproduct(framed_chromatic(g, rule))


@given(graphs(max_n=3), graphs(max_n=3), st.sampled_from(sorted(RULES)))
def test_multiplicative(g1, g2, rule):
    g1, g2 = canonical_graph(g1), canonical_graph(g2)
    assert framed_chromatic(disjoint_union(g1, g2), rule) == \
        framed_chromatic(g1, rule) * framed_chromatic(g2, rule)


@pytest.mark.parametrize("rule", CONSISTENT, ids=[r.name for r in CONSISTENT])
@given(g=graphs(max_n=4), data=st.data())
def test_parallel_edges_collapse(rule, g, data):
    if not g.edges:
        return
    doubled = data.draw(st.lists(st.sampled_from(g.edges), min_size=1, unique=True))
    m = FramedMultigraph(g.n, g.framing, tuple(sorted(g.edges + tuple(doubled))))
    assert framed_chromatic(m, rule) == framed_chromatic(collapse_parallel(m), rule)


def test_linear_extension():
    from framedchords.lincomb import LinComb
    a, b = parse_graph("2;00;1-2"), parse_graph("1;1;")
    v = LinComb({a: 2, b: -1})
    assert chromatic_on_lincomb(v) == framed_chromatic(a) * 2 - framed_chromatic(b)
