"""k-face-connectedness classes and k-block decompositions of outerplane graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, DomainError, NotOuterplanar
from .graph import Graph, connected_components, graph_on_edges
from .outerplane import OuterplaneEmbedding, block_embeddings


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller representative wins so the result is order independent
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def k_face_classes(emb: OuterplaneEmbedding, k: int) -> list[frozenset]:
    """Partition of the embedding's edges into k-face-connected classes.

    Every inner face of size at most ``k - 1`` glues all its edges together.
    Classes come back sorted by their smallest edge.
    """
    if k < 3:
        raise DomainError("k must be at least 3")
    uf = _UnionFind(sorted(emb.edges))
    for face in emb.faces:
        if face.size <= k - 1:
            es = face.edges
            for e in es[1:]:
                uf.union(es[0], e)
    groups: dict = {}
    for e in sorted(emb.edges):
        groups.setdefault(uf.find(e), set()).add(e)
    return sorted((frozenset(c) for c in groups.values()), key=min)


@dataclass(frozen=True)
class KBlockDecomposition:
    k: int
    classes: tuple  # frozensets of edges, original labels
    blocks: tuple   # densely relabelled Graph per class

    @property
    def orders(self) -> list[int]:
        return [b.n for b in self.blocks]

    def __len__(self) -> int:
        return len(self.classes)


def k_blocks(g: Graph, k: int, embeddings: list[OuterplaneEmbedding] | None = None) -> KBlockDecomposition:
    """k-block decomposition of a connected outerplanar graph.

    ``embeddings`` may pass precomputed block embeddings of ``g`` (as returned
    by :func:`block_embeddings`) to avoid re-embedding in sweeps over k.
    """
    if k < 3:
        raise DomainError("k must be at least 3")
    if len(connected_components(g)) > 1:
        raise Disconnected("k-blocks are defined for connected graphs")
    if embeddings is None:
        embeddings = block_embeddings(g)
    classes = []
    for emb in embeddings:
        classes.extend(k_face_classes(emb, k))
    classes.sort(key=min)
    blocks = tuple(graph_on_edges(c)[0] for c in classes)
    return KBlockDecomposition(k, tuple(classes), blocks)


def is_trivial_k_block(g: Graph, k: int) -> bool:
    """K2, or 2-connected outerplanar with every inner face of size at most k-1."""
    if k < 3:
        raise DomainError("k must be at least 3")
    if g.n == 2 and g.m == 1:
        return True
    if g.n < 3 or any(not a for a in g.adj):
        return False
    try:
        embs = block_embeddings(g)
    except NotOuterplanar:
        return False
    if len(embs) != 1 or embs[0].n != g.n:
        return False
    return all(f.size <= k - 1 for f in embs[0].faces)

