import itertools
import random

import pytest
from hypothesis import given

from framedchords.graphs import (EMPTY_GRAPH, FramedGraph, FramedMultigraph, GraphBoundError,
                                 GraphFormatError, canonical_graph, canonical_multigraph,
                                 complement_vertices, contract_edge, delete_edge, disjoint_union,
                                 enumerate_graphs, induced_subgraph, parse_graph, permute_graph)

from strategies import graphs


def random_framing_preserving_perm(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return perm


def brute_canonical(g):
    """Least code over all framing-preserving permutations (exhaustive)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        h = permute_graph(g, perm)
        key = (h.framing, h.edges)
        if best is None or key < best:
            best = key
    return best


def test_single_black_vertex():
    assert canonical_graph(FramedGraph(1, (0,), ())).code == "1;0;"


def test_empty_graph_code():
    assert EMPTY_GRAPH.code == "0;;"
    assert parse_graph("0;;") == EMPTY_GRAPH


def test_parse_black_white_edge():
    g = parse_graph("2;01;1-2")
    assert g.code == "2;01;1-2"
    assert g.n_white == 1


@pytest.mark.parametrize("text", ["2;01", "2;0;", "2;01;1-1", "2;01;1-3", "x;0;", "2;02;", "2;01;1-2,2-1", "2;01;1+2"])
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_error_reports_column():
    with pytest.raises(GraphFormatError, match="column 4"):
        parse_graph("2;0x;")


def test_path_relabelings_agree():
    # path u - v - w with framings 0, 1, 0
    base = FramedGraph(3, (0, 1, 0), ((0, 1), (1, 2)))
    codes = {canonical_graph(permute_graph(base, p)).code for p in itertools.permutations(range(3))}
    assert len(codes) == 1


def test_random_permutation_order_five():
    rng = random.Random(5)
    for g in rng.sample(enumerate_graphs(5), 40):
        perm = random_framing_preserving_perm(g, rng)
        assert canonical_graph(permute_graph(g, perm)) == g


def test_canonical_invariance_n_up_to_6():
    rng = random.Random(0)
    sample = [g for n in range(7) for g in enumerate_graphs(n, framed=(n <= 5))]
    for g in rng.sample(sample, 60):
        for _ in range(100):
            perm = random_framing_preserving_perm(g, rng)
            assert canonical_graph(permute_graph(g, perm)) == g


@given(graphs(max_n=6))
def test_canonical_idempotent(g):
    c = canonical_graph(g)
    assert canonical_graph(c) == c
    assert c.n == g.n and sorted(c.framing) == sorted(g.framing)
    assert len(c.edges) == len(g.edges)


@given(graphs(max_n=5))
def test_canonical_separates_like_brute_force(g):
    # two graphs share a canonical form iff they share the exhaustive minimum
    h = canonical_graph(g)
    assert brute_canonical(h) == brute_canonical(g)


def test_bound_is_enforced():
    with pytest.raises(GraphBoundError):
        canonical_graph(FramedGraph(11, (0,) * 11, ()))
    with pytest.raises(GraphBoundError):
        enumerate_graphs(3, bound=2)


def test_enumerate_small_counts():
    assert len(enumerate_graphs(1)) == 2
    assert len(enumerate_graphs(2)) == 6
    assert len(enumerate_graphs(3, framed=False)) == 4


def test_enumerate_counts_against_brute_force():
    for n in range(5):
        for framed in (False, True):
            seen = set()
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            framings = itertools.product((0, 1), repeat=n) if framed else [(0,) * n]
            for f in framings:
                for r in range(len(pairs) + 1):
                    for edges in itertools.combinations(pairs, r):
                        seen.add(brute_canonical(FramedGraph(n, f, edges)))
            assert len(enumerate_graphs(n, framed)) == len(seen)


def test_unlabelled_graph_counts():
    assert [len(enumerate_graphs(n, False)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_enumeration_sorted():
    gs = enumerate_graphs(4)
    assert list(gs) == sorted(gs)


def test_contract_black_pair():
    g = parse_graph("2;00;1-2")
    m = contract_edge(g, (0, 1))
    assert m.n == 1 and m.framing == (0,) and not m.edges


def test_contract_black_white_pair_gives_white():
    g = parse_graph("2;01;1-2")
    m = contract_edge(g, (0, 1))
    assert m.framing == (1,)


def test_contract_triangle_gives_double_edge():
    g = parse_graph("3;000;1-2,1-3,2-3")
    m = contract_edge(g, (0, 1))
    assert m.n == 2
    assert m.edges == ((0, 1), (0, 1))
    assert not m.has_loop


def test_contract_parallel_copy_becomes_loop():
    m = FramedMultigraph(2, (0, 0), ((0, 1), (0, 1)))
    c = contract_edge(m, (0, 1))
    assert c.has_loop


def test_contract_explicit_merged_framing():
    g = parse_graph("2;11;1-2")
    assert contract_edge(g, (0, 1), lambda a, b: 0).framing == (0,)


def test_missing_edge_errors():
    g = parse_graph("2;00;")
    with pytest.raises(KeyError):
        delete_edge(g, (0, 1))
    with pytest.raises(KeyError):
        contract_edge(g, (0, 1))


def test_delete_removes_one_copy():
    m = FramedMultigraph(2, (0, 1), ((0, 1), (0, 1)))
    assert delete_edge(m, (1, 0)).edges == ((0, 1),)


def test_union_with_empty():
    g = parse_graph("3;010;1-2,2-3")
    assert disjoint_union(g, EMPTY_GRAPH) == g
    assert disjoint_union(EMPTY_GRAPH, g) == g


@given(graphs(max_n=3), graphs(max_n=3), graphs(max_n=3))
def test_union_commutative_associative(a, b, c):
    a, b, c = canonical_graph(a), canonical_graph(b), canonical_graph(c)
    assert disjoint_union(a, b) == disjoint_union(b, a)
    assert disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c))


def test_induced_subgraph_examples():
    k3 = parse_graph("3;000;1-2,1-3,2-3")
    assert induced_subgraph(k3, [0, 1]).code == "2;00;1-2"
    path = FramedGraph(3, (0, 1, 0), ((0, 1), (1, 2)))
    assert induced_subgraph(path, [0, 2]).code == "2;00;"


@given(graphs(max_n=6))
def test_induced_and_complement_sizes(g):
    rng = random.Random(g.n)
    sub = [v for v in range(g.n) if rng.random() < 0.5]
    a = induced_subgraph(g, sub)
    b = induced_subgraph(g, complement_vertices(g, sub))
    assert a.n + b.n == g.n
    assert a.n_white + b.n_white == g.n_white


def test_simple_graph_invariants():
    with pytest.raises(GraphFormatError):
        FramedGraph(2, (0, 0), ((0, 0),))
    with pytest.raises(GraphFormatError):
        FramedGraph(2, (0, 0), ((0, 1), (1, 0)))
    assert FramedGraph(2, (0, 0), ((1, 0),)).edges == ((0, 1),)


def test_canonical_multigraph_invariance():
    m = FramedMultigraph(3, (0, 1, 0), ((0, 1), (0, 1), (1, 2)))
    n = FramedMultigraph(3, (0, 1, 0), ((1, 2), (1, 2), (0, 1)))
    assert canonical_multigraph(m) == canonical_multigraph(n)
