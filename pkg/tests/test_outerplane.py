import random

import networkx as nx
import pytest

from opturan.errors import NotBiconnected, NotOuterplanar
from opturan.graph import Graph, biconnected_blocks, complete_bipartite, complete_graph, cycle_graph
from opturan.outerplane import (
    OuterplaneEmbedding, block_embeddings, embed, inner_faces, is_maximal_outerplanar, is_outerplanar,
)

from gen import random_maximal_outerplanar, random_outerplanar


def fan(m):
    return Graph.from_edges(m, [(0, i) for i in range(1, m)] + [(i, i + 1) for i in range(1, m - 1)])


def pentagon_chord():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def nx_outerplanar(h):
    # outerplanar iff adding a universal vertex keeps the graph planar
    a = h.copy()
    apex = max(a.nodes, default=-1) + 1
    a.add_edges_from((apex, v) for v in h.nodes)
    return nx.check_planarity(a)[0]


def from_nx(h):
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def test_recognition_examples(rng):
    assert not is_outerplanar(complete_graph(4))
    assert not is_outerplanar(complete_bipartite(2, 3))
    assert is_outerplanar(Graph(6, frozenset(random_maximal_outerplanar(6, rng))))
    assert is_outerplanar(Graph(0)) and is_outerplanar(Graph(1))


def test_embed_examples():
    e = embed(cycle_graph(5))
    assert e.outer == (0, 1, 2, 3, 4) and not e.chords
    e = embed(fan(4))
    assert e.outer == (0, 1, 2, 3) and e.chords == {(0, 2)}
    with pytest.raises(NotOuterplanar):
        embed(complete_graph(4))
    with pytest.raises(NotBiconnected):
        embed(Graph.from_edges(3, [(0, 1), (1, 2)]))


def test_face_examples():
    assert [f.size for f in embed(cycle_graph(6)).faces] == [6]
    assert [f.size for f in embed(fan(5)).faces] == [3, 3, 3]
    assert sorted(f.size for f in embed(pentagon_chord()).faces) == [3, 4]


def test_maximal_examples(rng):
    assert is_maximal_outerplanar(Graph(6, frozenset(random_maximal_outerplanar(6, rng))))
    assert not is_maximal_outerplanar(cycle_graph(6))
    assert is_maximal_outerplanar(Graph.from_edges(2, [(0, 1)]))
    assert not is_maximal_outerplanar(Graph(1))


def test_embedding_rejects_crossing_chords():
    with pytest.raises(ValueError):
        OuterplaneEmbedding((0, 1, 2, 3), frozenset({(0, 2), (1, 3)}))
    with pytest.raises(ValueError):
        OuterplaneEmbedding((0, 1, 2, 3), frozenset({(0, 1)}))


def test_recognition_matches_networkx_atlas():
    # every graph on at most 7 vertices
    for h in nx.graph_atlas_g()[1:]:
        assert is_outerplanar(from_nx(h)) == nx_outerplanar(h), list(h.edges())


def test_embedding_invariants_on_atlas():
    for h in nx.graph_atlas_g()[1:]:
        g = from_nx(h)
        if g.n < 3 or not nx.is_biconnected(h) or not nx_outerplanar(h):
            continue
        emb = embed(g)
        assert sorted(emb.outer) == list(range(g.n))
        assert emb.edges == g.edges
        faces = emb.faces
        # Euler: inner faces = m - n + 1; every edge is on two faces counting the outer one
        assert len(faces) == g.m - g.n + 1
        assert sum(f.size for f in faces) + g.n == 2 * g.m
        assert all(f.size >= 3 for f in faces)
        for f in faces:
            assert all(g.has_edge(u, v) for u, v in f.edges)


def test_random_large_embeddings(rng):
    for _ in range(100):
        n = rng.randrange(3, 60)
        g = random_outerplanar(n, rng, keep=0.85)
        embs = block_embeddings(g)
        blocks, _ = biconnected_blocks(g)
        assert sorted(frozenset(e.edges) for e in embs) == sorted(blocks)
        for emb in embs:
            faces = inner_faces(emb)
            if emb.n >= 3:
                assert sum(f.size for f in faces) + emb.n == 2 * len(emb.edges)


def test_adding_an_edge_to_maximal_breaks_outerplanarity(rng):
    for _ in range(30):
        n = rng.randrange(4, 12)
        edges = random_maximal_outerplanar(n, rng)
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        extra = rng.choice(missing)
        assert not is_outerplanar(Graph(n, frozenset(edges | {extra})))
