import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from opturan.errors import DuplicateEdge, GraphError, LoopEdge, VertexOutOfRange
from opturan.graph import (
    Graph, biconnected_blocks, complete_graph, connected_components, cycle_graph, disjoint_union,
    from_graph6, graph_on_edges, is_connected, path_graph, star_graph, to_dot, to_graph6,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


def test_from_edges_basic():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert p3.m == 2 and p3.degree(1) == 2
    assert Graph.from_edges(1, []).m == 0
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.m == 4 and c4.has_edge(0, 3) and c4.has_edge(3, 0)
    assert c4 == cycle_graph(4)


@pytest.mark.parametrize("n,pairs,exc", [
    (3, [(1, 1)], LoopEdge),
    (3, [(0, 1), (1, 0)], DuplicateEdge),
    (3, [(0, 3)], VertexOutOfRange),
    (-1, [], GraphError),
])
def test_from_edges_rejects(n, pairs, exc):
    with pytest.raises(exc):
        Graph.from_edges(n, pairs)


def test_components():
    g = Graph.from_edges(3, [(1, 2)])
    assert sorted(map(sorted, connected_components(g))) == [[0], [1, 2]]
    assert [sorted(c) for c in connected_components(cycle_graph(4))] == [[0, 1, 2, 3]]
    assert connected_components(Graph(0)) == []
    assert not is_connected(g) and is_connected(cycle_graph(4))


def test_blocks_examples():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    blocks, cuts = biconnected_blocks(bowtie)
    assert sorted(len(b) for b in blocks) == [3, 3] and cuts == [0]
    blocks, cuts = biconnected_blocks(cycle_graph(5))
    assert len(blocks) == 1 and cuts == []
    blocks, cuts = biconnected_blocks(path_graph(4))
    assert len(blocks) == 3 and all(len(b) == 1 for b in blocks) and cuts == [1, 2]


def test_blocks_match_networkx():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(1, 12)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.25]
        g = Graph.from_edges(n, pairs)
        blocks, cuts = biconnected_blocks(g)
        h = to_nx(g)
        want = sorted(sorted(tuple(sorted(e)) for e in c) for c in nx.biconnected_component_edges(h))
        assert sorted(sorted(b) for b in blocks) == want
        assert cuts == sorted(nx.articulation_points(h))


def test_graph_on_edges_relabels_densely():
    g, labels = graph_on_edges([(4, 9), (9, 12)])
    assert g.n == 3 and g.m == 2 and labels == [4, 9, 12]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 70).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=80))))
def test_graph6_matches_networkx(data):
    n, raw = data
    g = Graph(n, frozenset((min(u, v), max(u, v)) for u, v in raw if u != v))
    mine = to_graph6(g)
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert mine == ref
    assert from_graph6(mine) == g
    assert from_graph6(">>graph6<<" + mine + "\n") == g


def test_graph6_large_order():
    g = star_graph(99)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "A\x7f", "~", "Bw?"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_helpers():
    assert complete_graph(4).m == 6
    assert star_graph(3).degree(0) == 3
    u = disjoint_union([cycle_graph(3), path_graph(2)])
    assert u.n == 5 and u.m == 4 and len(connected_components(u)) == 2
    assert "0 -- 1;" in to_dot(path_graph(2))
    assert path_graph(4).relabel([3, 2, 1, 0]) == path_graph(4)
