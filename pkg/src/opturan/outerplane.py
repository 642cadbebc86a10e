"""Outerplanarity recognition and outerplane embeddings of 2-connected graphs.

An embedding is stored combinatorially: the outer Hamilton cycle as a vertex
sequence plus the chords, which must not cross with respect to that cyclic
order. Vertex labels are arbitrary integers, so the blocks of a larger graph
can be embedded without relabelling.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import NotBiconnected, NotOuterplanar
from .graph import Edge, Graph, biconnected_blocks, canon, graph_on_edges


@dataclass(frozen=True)
class InnerFace:
    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def edges(self) -> list[Edge]:
        b = self.boundary
        return [canon(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class OuterplaneEmbedding:
    """Outer cycle order plus non-crossing chords.

    ``outer`` has length 1 or 2 for the degenerate K1 / K2 embeddings, in which
    case there are no chords and no inner faces.
    """

    outer: tuple[int, ...]
    chords: frozenset = frozenset()

    def __post_init__(self):
        n = len(self.outer)
        if len(set(self.outer)) != n or n == 0:
            raise ValueError("outer order must list distinct vertices")
        if n < 3 and self.chords:
            raise ValueError("degenerate embedding cannot carry chords")
        if n >= 3:
            pos = self.position
            for a, b in self.chords:
                if a not in pos or b not in pos:
                    raise ValueError(f"chord {(a, b)} not on the outer cycle")
                if (pos[a] - pos[b]) % n in (0, 1, n - 1):
                    raise ValueError(f"chord {(a, b)} joins cycle-adjacent vertices")
            if not _laminar(pos, self.chords):
                raise ValueError("chords cross")

    @property
    def n(self) -> int:
        return len(self.outer)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer)}

    @cached_property
    def outer_edges(self) -> frozenset:
        n = self.n
        if n == 1:
            return frozenset()
        if n == 2:
            return frozenset([canon(*self.outer)])
        return frozenset(canon(self.outer[i], self.outer[(i + 1) % n]) for i in range(n))

    @cached_property
    def edges(self) -> frozenset:
        return self.outer_edges | frozenset(canon(a, b) for a, b in self.chords)

    def to_graph(self) -> tuple[Graph, list[int]]:
        """Dense-labelled graph plus the map from new labels to ``outer`` labels."""
        if self.n == 1:
            return Graph(1), list(self.outer)
        return graph_on_edges(self.edges)

    @cached_property
    def faces(self) -> tuple[InnerFace, ...]:
        return tuple(inner_faces(self))


def _laminar(pos: dict[int, int], chords: Iterable[Edge]) -> bool:
    ivs = sorted(
        ((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in chords),
        key=lambda iv: (iv[0], -iv[1]),
    )
    open_ends: list[int] = []
    for i, j in ivs:
        while open_ends and open_ends[-1] <= i:
            open_ends.pop()
        if open_ends and j > open_ends[-1]:
            return False
        open_ends.append(j)
    return True


def _is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return False
    blocks, _ = biconnected_blocks(g)
    return len(blocks) == 1 and len({x for e in blocks[0] for x in e}) == g.n


def hamilton_outer_cycle(vertices: Iterable[int], edges: Iterable[Edge]) -> list[int]:
    """Outer Hamilton cycle of a 2-connected outerplanar graph (at least 3 vertices).

    Repeatedly removes a degree-2 vertex, joining its two neighbours, until a
    triangle remains, then reinserts the removed vertices in reverse order.
    Raises NotOuterplanar when the reduction gets stuck or the result is not a
    valid embedding. The input is assumed 2-connected.
    """
    verts = sorted(set(vertices))
    real = {canon(u, v) for u, v in edges}
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in real:
        adj[u].add(v)
        adj[v].add(u)
    if len(real) > 2 * len(verts) - 3:
        raise NotOuterplanar("too many edges")

    heap = [v for v in verts if len(adj[v]) == 2]
    heapq.heapify(heap)
    alive = set(verts)
    removed: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        while heap and (heap[0] not in alive or len(adj[heap[0]]) != 2):
            heapq.heappop(heap)
        if not heap:
            raise NotOuterplanar("no degree-2 vertex left")
        v = heapq.heappop(heap)
        u, w = sorted(adj[v])
        alive.discard(v)
        adj[u].discard(v)
        adj[w].discard(v)
        del adj[v]
        adj[u].add(w)
        adj[w].add(u)
        removed.append((v, u, w))
        for x in (u, w):
            if len(adj[x]) == 2:
                heapq.heappush(heap, x)

    a, b, c = sorted(alive)
    if not (b in adj[a] and c in adj[b] and a in adj[c]):
        raise NotOuterplanar("reduction did not end in a triangle")
    nxt = {a: b, b: c, c: a}
    for v, u, w in reversed(removed):
        if nxt[u] == w:
            nxt[u], nxt[v] = v, w
        elif nxt[w] == u:
            nxt[w], nxt[v] = v, u
        else:
            raise NotOuterplanar(f"neighbours {u},{w} of {v} not consecutive")

    start = verts[0]
    cyc = [start]
    while len(cyc) < len(verts):
        cyc.append(nxt[cyc[-1]])
    if nxt[cyc[-1]] != start:
        raise NotOuterplanar("reinsertion broke the cycle")
    # orient towards the smaller neighbour of the start vertex
    if cyc[-1] < cyc[1]:
        cyc = [start] + cyc[:0:-1]
    return cyc


def _embed_parts(vertices: list[int], edges: frozenset) -> OuterplaneEmbedding:
    cyc = hamilton_outer_cycle(vertices, edges)
    n = len(cyc)
    ring = {canon(cyc[i], cyc[(i + 1) % n]) for i in range(n)}
    if not ring <= edges:
        raise NotOuterplanar("outer cycle uses a non-edge")
    chords = edges - ring
    pos = {v: i for i, v in enumerate(cyc)}
    if not _laminar(pos, chords):
        raise NotOuterplanar("chords cross")
    return OuterplaneEmbedding(tuple(cyc), frozenset(chords))


def embed(g: Graph) -> OuterplaneEmbedding:
    """Outerplane embedding of a 2-connected outerplanar graph, K1 or K2."""
    if g.n == 1:
        return OuterplaneEmbedding((0,))
    if g.n == 2 and g.m == 1:
        return OuterplaneEmbedding((0, 1))
    if not _is_biconnected(g):
        raise NotBiconnected(f"graph on {g.n} vertices is not 2-connected")
    if g.m > 2 * g.n - 3:
        raise NotOuterplanar(f"{g.m} edges exceed 2n-3 = {2 * g.n - 3}")
    return _embed_parts(list(range(g.n)), g.edges)


def embed_block(edges: Iterable[Edge]) -> OuterplaneEmbedding:
    """Embed one biconnected block given as an edge set, keeping its labels."""
    es = frozenset(canon(u, v) for u, v in edges)
    verts = sorted({x for e in es for x in e})
    if len(es) == 1:
        return OuterplaneEmbedding(tuple(verts))
    return _embed_parts(verts, es)


def block_embeddings(g: Graph) -> list[OuterplaneEmbedding]:
    """Embeddings of every biconnected block of ``g`` (bridges as K2)."""
    if g.n >= 2 and g.m > 2 * g.n - 3:
        raise NotOuterplanar(f"{g.m} edges exceed 2n-3 = {2 * g.n - 3}")
    blocks, _ = biconnected_blocks(g)
    return [embed_block(b) for b in blocks]


def is_outerplanar(g: Graph) -> bool:
    try:
        block_embeddings(g)
    except NotOuterplanar:
        return False
    return True


def inner_faces(emb: OuterplaneEmbedding) -> list[InnerFace]:
    """Bounded faces of the embedding, each as a cycle in outer-order direction."""
    n = emb.n
    if n < 3:
        return []
    pos = emb.position
    order = emb.outer
    nbr_d: list[list[int]] = [[] for _ in range(n)]
    for a, b in emb.edges:
        i, j = pos[a], pos[b]
        nbr_d[i].append((j - i) % n)
        nbr_d[j].append((i - j) % n)
    for lst in nbr_d:
        lst.sort()

    def turn(u: int, v: int) -> int:
        ds = nbr_d[v]
        k = bisect_left(ds, (u - v) % n)
        d = ds[k - 1] if k > 0 else ds[-1]
        return (v + d) % n

    seen: set[tuple[int, int]] = set()
    faces = []
    for i in range(n):
        for d in nbr_d[i]:
            dart = (i, (i + d) % n)
            if dart in seen:
                continue
            walk = []
            outer = False
            cur = dart
            while cur not in seen:
                seen.add(cur)
                walk.append(cur[0])
                outer = outer or cur == (1, 0)
                cur = (cur[1], turn(*cur))
            if outer:
                continue
            k = walk.index(min(walk))
            walk = walk[k:] + walk[:k]
            faces.append(walk)
    faces.sort()
    return [InnerFace(tuple(order[p] for p in w)) for w in faces]


def is_maximal_outerplanar(g: Graph) -> bool:
    """K2, or a 2-connected outerplanar graph with exactly 2n-3 edges."""
    if g.n < 2 or g.m != 2 * g.n - 3:
        return False
    if g.n == 2:
        return True
    return _is_biconnected(g) and is_outerplanar(g)
