"""Simple undirected graphs on vertices 0..n-1, plus graph6 and DOT I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import DuplicateEdge, GraphError, LoopEdge, VertexOutOfRange

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as sorted ``(min, max)`` pairs."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            e = canon(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge {e} given twice")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edges

    def subgraph_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping only ``edges``."""
        return Graph(self.n, frozenset(canon(u, v) for u, v in edges))

    def relabel(self, perm: list[int]) -> "Graph":
        """Apply the vertex map ``v -> perm[v]``."""
        return Graph(self.n, frozenset(canon(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list})"


def graph_on_edges(edges: Iterable[Edge]) -> tuple[Graph, list[int]]:
    """Graph formed by ``edges`` alone, relabelled densely.

    Returns the new graph and the list mapping new labels to old ones.
    """
    es = sorted(canon(u, v) for u, v in edges)
    verts = sorted({x for e in es for x in e})
    index = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), frozenset(canon(index[u], index[v]) for u, v in es)), verts


def connected_components(g: Graph) -> list[set[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def biconnected_blocks(g: Graph) -> tuple[list[frozenset], list[int]]:
    """Block / cut-vertex decomposition.

    Returns ``(blocks, cut_vertices)``: each block is a frozenset of edges (a
    bridge is a one-edge block), blocks are ordered by their smallest edge and
    cut vertices are sorted. Isolated vertices belong to no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset] = []
    cuts: set[int] = set()
    timer = 0
    nbrs = [sorted(a) for a in g.adj]

    for root in range(g.n):
        if disc[root] != -1 or not nbrs[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        root_children = 0
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            if i < len(nbrs[u]):
                frame[2] += 1
                w = nbrs[u][i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append(canon(u, w))
                    stack.append([w, u, 0])
                elif w != parent and disc[w] < disc[u]:
                    edge_stack.append(canon(u, w))
                    low[u] = min(low[u], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                top = canon(parent, u)
                block = set()
                while True:
                    e = edge_stack.pop()
                    block.add(e)
                    if e == top:
                        break
                blocks.append(frozenset(block))
        if root_children >= 2:
            cuts.add(root)

    blocks.sort(key=min)
    return blocks, sorted(cuts)


# -- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError("invalid graph6 character")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) < 4 or (data[1] == 63 and len(data) < 8):
        raise GraphError("truncated graph6 header")
    elif data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphError(f"graph6 body has {len(rest)} bytes, expected {need}")
    bits = [(x >> s) & 1 for x in rest for s in range(5, -1, -1)]
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edge_list]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- small named graphs used throughout ---------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges = set()
    off = 0
    for h in graphs:
        edges.update((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(edges))
