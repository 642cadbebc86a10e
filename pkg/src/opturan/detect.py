"""Exact detection of cycle lengths and longest paths."""

from __future__ import annotations

from collections import defaultdict

from .errors import DomainError, NotBiconnected, NotOuterplanar, TooLarge
from .graph import Graph, biconnected_blocks, connected_components
from .outerplane import OuterplaneEmbedding, block_embeddings

LONGEST_PATH_BOUND = 24


def _bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def cycle_spectrum(emb: OuterplaneEmbedding) -> frozenset:
    """All cycle lengths of a 2-connected outerplane graph.

    Cycles correspond one-to-one to connected subtrees of the weak dual tree;
    a subtree's cycle has length ``2 + sum(size - 2)`` over its faces. The DP
    keeps, per face, a bitset of the sums reachable by subtrees rooted there.
    """
    if emb.n < 3:
        return frozenset()
    faces = emb.faces
    if not faces:
        raise NotBiconnected("embedding has no inner face")
    on_edge = defaultdict(list)
    for i, f in enumerate(faces):
        for e in f.edges:
            on_edge[e].append(i)
    tree = defaultdict(list)
    for fs in on_edge.values():
        if len(fs) == 2:
            a, b = fs
            tree[a].append(b)
            tree[b].append(a)

    # iterative post-order from face 0
    parent = {0: -1}
    order = [0]
    for u in order:
        for w in tree[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    reach = {}
    spectrum = 0
    for u in reversed(order):
        cur = 1 << (faces[u].size - 2)
        for w in tree[u]:
            if w == parent[u]:
                continue
            combined = cur
            for x in _bits(reach[w]):
                combined |= cur << x
            cur = combined
        reach[u] = cur
        spectrum |= cur
    return frozenset(x + 2 for x in _bits(spectrum))


def graph_cycle_spectrum(g: Graph) -> frozenset:
    """Union of block spectra; ``g`` must be outerplanar."""
    out: set[int] = set()
    for emb in block_embeddings(g):
        out |= cycle_spectrum(emb)
    return frozenset(out)


def _search_cycle(g: Graph, k: int) -> bool:
    # cycles are found once per smallest vertex, walking only over larger ones
    for s in range(g.n):
        stack = [(s, 1 << s, 1)]
        while stack:
            u, seen, length = stack.pop()
            for w in g.adj[u]:
                if w == s and length == k:
                    return True
                if w > s and not (seen >> w) & 1 and length < k:
                    stack.append((w, seen | (1 << w), length + 1))
    return False


def has_cycle_len(g: Graph, k: int) -> bool:
    """Whether ``g`` contains a cycle on exactly ``k`` vertices."""
    if k < 3 or k > g.n:
        return False
    try:
        return k in graph_cycle_spectrum(g)
    except NotOuterplanar:
        return _search_cycle(g, k)


def longest_path_len(g: Graph, bound: int = LONGEST_PATH_BOUND) -> int:
    """Number of edges on a longest path, by pruned exhaustive search."""
    if g.n > bound:
        raise TooLarge(f"exact longest path limited to {bound} vertices, got {g.n}")
    best = 0
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        cap = len(comp) - 1
        comp_best = 0
        for s in sorted(comp):
            stack = [(s, 1 << s, 0)]
            while stack:
                u, seen, length = stack.pop()
                if length > comp_best:
                    comp_best = length
                    if comp_best == cap:
                        break
                if length + _reachable(g, u, seen) <= comp_best:
                    continue
                for w in g.adj[u]:
                    if not (seen >> w) & 1:
                        stack.append((w, seen | (1 << w), length + 1))
            if comp_best == cap:
                break
        best = max(best, comp_best)
    return best


def _reachable(g: Graph, u: int, seen: int) -> int:
    """Unvisited vertices reachable from ``u`` avoiding the visited set."""
    mark = seen
    stack = [u]
    count = 0
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if not (mark >> w) & 1:
                mark |= 1 << w
                count += 1
                stack.append(w)
    return count


def longest_path_upper_bound(g: Graph) -> int:
    """Upper bound on the longest path from the block-cut tree.

    A path never re-enters a block it has left, so the blocks it uses lie on a
    path of the block-cut tree and it spends at most ``|B| - 1`` edges in each
    block ``B``. The bound is the heaviest such tree path; it is exact when
    every block has a Hamilton path between any of its cut vertices, as in
    fans and cacti of fans.
    """
    blocks, cuts = biconnected_blocks(g)
    if not blocks:
        return 0
    cut_set = set(cuts)
    weight = {}
    tree = defaultdict(list)
    for i, b in enumerate(blocks):
        verts = {x for e in b for x in e}
        weight[("b", i)] = len(verts) - 1
        for v in verts & cut_set:
            tree[("b", i)].append(("c", v))
            tree[("c", v)].append(("b", i))
    for v in cut_set:
        weight[("c", v)] = 0

    best = 0
    down = {}
    visited = set()
    for root in weight:
        if root in visited:
            continue
        visited.add(root)
        order = [root]
        par = {root: None}
        for u in order:
            for w in tree[u]:
                if w not in visited:
                    visited.add(w)
                    par[w] = u
                    order.append(w)
        for u in reversed(order):
            top1 = top2 = 0
            for w in tree[u]:
                if w == par[u]:
                    continue
                d = down[w]
                if d > top1:
                    top1, top2 = d, top1
                elif d > top2:
                    top2 = d
            down[u] = weight[u] + top1
            best = max(best, weight[u] + top1 + top2)
    return best


def is_pk_free(g: Graph, k: int, bound: int = LONGEST_PATH_BOUND) -> bool:
    """Whether ``g`` has no path on ``k`` vertices."""
    if k < 2:
        raise DomainError("k must be at least 2")
    if longest_path_upper_bound(g) <= k - 2:
        return True
    return longest_path_len(g, bound) <= k - 2
