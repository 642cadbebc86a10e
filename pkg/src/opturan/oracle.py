"""Brute-force ground truth over all outerplanar graphs of small order.

Every n-vertex outerplanar graph is a spanning subgraph of a maximal
outerplanar graph, i.e. of some triangulation of the convex n-gon, so
enumerating triangulations and then edge subsets reaches every graph up to
isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

from . import detect
from .errors import BudgetExceeded, DomainError, NotOuterplanar
from .graph import Graph, canon, is_connected
from .kblock import k_blocks, k_face_classes
from .outerplane import OuterplaneEmbedding, block_embeddings, embed_block

DEFAULT_BUDGET = 10


def _check_budget(n: int, budget: int) -> None:
    if n > budget:
        raise BudgetExceeded(f"n={n} exceeds the enumeration budget {budget}")


@lru_cache(maxsize=None)
def _polygon_chords(i: int, j: int) -> tuple:
    """All chord sets triangulating the sub-polygon on positions i..j (base ij)."""
    if j - i < 2:
        return (frozenset(),)
    out = []
    for m in range(i + 1, j):
        own = set()
        if m - i >= 2:
            own.add((i, m))
        if j - m >= 2:
            own.add((m, j))
        for left in _polygon_chords(i, m):
            for right in _polygon_chords(m, j):
                out.append(frozenset(own) | left | right)
    return tuple(out)


def enumerate_triangulations(n: int) -> Iterator[OuterplaneEmbedding]:
    """Every triangulation of the convex polygon 0, 1, ..., n-1."""
    if n < 3:
        raise DomainError(f"polygon needs at least 3 vertices, got {n}")
    outer = tuple(range(n))
    for chords in _polygon_chords(0, n - 1):
        yield OuterplaneEmbedding(outer, chords)


def _host_edges(n: int) -> Iterator[list]:
    if n == 1:
        yield []
    elif n == 2:
        yield [(0, 1)]
    else:
        for tri in enumerate_triangulations(n):
            yield sorted(tri.edges)


def brute_ex(n: int, free: Callable[[Graph], bool], budget: int = DEFAULT_BUDGET) -> int:
    """Maximum size of an admissible n-vertex outerplanar graph.

    ``free(g)`` decides admissibility (e.g. "has no C_k"). Subsets of every
    host are scanned largest first and a host stops once it cannot beat the
    current best, so no monotonicity of ``free`` is assumed.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    _check_budget(n, budget)
    best = -1
    for edges in _host_edges(n):
        for size in range(len(edges), best, -1):
            if any(free(Graph(n, frozenset(sub))) for sub in combinations(edges, size)):
                best = size
                break
    return best


# -- copy-based search for cycles and paths -------------------------------------

def _cycle_copies(n: int, edges: list, k: int) -> list[int]:
    """Edge masks of all k-cycles of the host graph."""
    bit = {e: 1 << i for i, e in enumerate(edges)}
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    masks = set()
    for s in range(n):
        stack = [(s, [s])]
        while stack:
            u, walk = stack.pop()
            for w in adj[u]:
                if w == s and len(walk) == k and walk[1] < walk[-1]:
                    mask = bit[canon(u, s)]
                    for a, b in zip(walk, walk[1:]):
                        mask |= bit[canon(a, b)]
                    masks.add(mask)
                elif w > s and w not in walk and len(walk) < k:
                    stack.append((w, walk + [w]))
    return sorted(masks)


def _path_copies(n: int, edges: list, k: int) -> list[int]:
    """Edge masks of all paths on k vertices of the host graph."""
    bit = {e: 1 << i for i, e in enumerate(edges)}
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    masks = set()
    for s in range(n):
        stack = [(s, (s,), 0)]
        while stack:
            u, walk, mask = stack.pop()
            if len(walk) == k:
                if walk[0] < walk[-1]:
                    masks.add(mask)
                continue
            for w in adj[u]:
                if w not in walk:
                    stack.append((w, walk + (w,), mask | bit[canon(u, w)]))
    return sorted(masks)


def _hits_within(copies: list[int], limit: int) -> int | None:
    """Mask of at most ``limit`` edges meeting every copy, or None if none exists."""

    def lower_bound(chosen: int, banned: int) -> int | None:
        # pairwise edge-disjoint unhit copies each need their own deletion;
        # None when some unhit copy has every edge banned
        used = 0
        count = 0
        for c in copies:
            if not c & chosen:
                if not c & ~banned:
                    return None
                if not c & used:
                    used |= c
                    count += 1
        return count

    def search(chosen: int, banned: int, left: int) -> int | None:
        target = None
        for c in copies:
            if not c & chosen:
                target = c
                break
        if target is None:
            return chosen
        if left == 0:
            return None
        lb = lower_bound(chosen, banned)
        if lb is None or lb > left:
            return None
        avail = target & ~banned
        while avail:
            low = avail & -avail
            found = search(chosen | low, banned, left - 1)
            if found is not None:
                return found
            banned |= low
            avail ^= low
        return None

    return search(0, 0, limit)


def _brute_by_copies(n: int, k: int, copies_of, budget: int) -> tuple[int, Graph]:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    _check_budget(n, budget)
    best, witness = -1, None
    for edges in _host_edges(n):
        m = len(edges)
        copies = copies_of(n, edges, k)
        # only deletion sets smaller than m - best can improve on the best so far
        for r in range(0, m - best):
            hit = _hits_within(copies, r)
            if hit is not None:
                best = m - r
                witness = Graph(n, frozenset(e for i, e in enumerate(edges) if not (hit >> i) & 1))
                break
    return best, witness


def brute_ex_cycle(n: int, k: int, budget: int = DEFAULT_BUDGET, witness: bool = False):
    """Brute-force max size of a C_k-free outerplanar graph on n vertices."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    value, g = _brute_by_copies(n, k, _cycle_copies, budget)
    return (value, g) if witness else value


def brute_ex_path(n: int, k: int, budget: int = DEFAULT_BUDGET, witness: bool = False):
    """Brute-force max size of a P_k-free outerplanar graph on n vertices."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    value, g = _brute_by_copies(n, k, _path_copies, budget)
    return (value, g) if witness else value


def brute_ex_cycle_generic(n: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Same value as :func:`brute_ex_cycle`, via the generic predicate scan."""
    return brute_ex(n, lambda g: not detect.has_cycle_len(g, k), budget)


def brute_ex_path_generic(n: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    return brute_ex(n, lambda g: detect.is_pk_free(g, k), budget)


# -- graph enumeration ----------------------------------------------------------

def _polygon_subgraphs(n: int) -> Iterator[frozenset]:
    seen: set = set()
    for edges in _host_edges(n):
        for mask in range(1 << len(edges)):
            sub = frozenset(e for i, e in enumerate(edges) if (mask >> i) & 1)
            if sub not in seen:
                seen.add(sub)
                yield sub


def all_outerplanar(n: int, labeled: bool = True, budget: int = DEFAULT_BUDGET) -> Iterator[Graph]:
    """Outerplanar graphs on vertices 0..n-1, each edge set yielded once.

    With ``labeled=True`` every labelled outerplanar graph appears (feasible
    only for small n). With ``labeled=False`` only spanning subgraphs of
    triangulations of the polygon 0..n-1 are produced, which still covers
    every outerplanar graph up to isomorphism.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    _check_budget(n, budget)
    if not labeled:
        for sub in _polygon_subgraphs(n):
            yield Graph(n, sub)
        return
    seen: set = set()
    base = list(_polygon_subgraphs(n))
    for perm in permutations(range(n)):
        for sub in base:
            img = frozenset(canon(perm[u], perm[v]) for u, v in sub)
            if img not in seen:
                seen.add(img)
                yield Graph(n, img)


# -- property sweeps ------------------------------------------------------------

def order_bound_violations(n_max: int = 7, ks=range(3, 8), budget: int = DEFAULT_BUDGET):
    """Connected C_k-free graphs whose order falls below the block-assembly bound.

    Yields ``(graph, k, bound)`` for every violation; the sweep covers every
    connected outerplanar graph with 2..n_max vertices up to isomorphism.
    """
    for n in range(2, n_max + 1):
        for g in all_outerplanar(n, labeled=False, budget=budget):
            if g.m == 0 or not is_connected(g):
                continue
            embs = block_embeddings(g)
            spectrum = set()
            for emb in embs:
                spectrum |= detect.cycle_spectrum(emb)
            for k in ks:
                if k in spectrum:
                    continue
                dec = k_blocks(g, k, embeddings=embs)
                t = len(dec)
                bound = sum(dec.orders) - (t - 1) // k - t + 1
                if g.n < bound:
                    yield g, k, bound


def kblock_structure_violations(n_max: int = 7, ks=range(3, 8), budget: int = DEFAULT_BUDGET):
    """Check the structure of k-blocks on every outerplanar graph up to n_max.

    For each class: its edges hold every inner (k-1)^- face they touch, the
    class graph is K2 or 2-connected with only such faces, and a graph that is
    itself a trivial k-block forms one class. Yields ``(graph, k, reason)``.
    """
    class_cache: dict = {}
    for n in range(1, n_max + 1):
        for g in all_outerplanar(n, labeled=False, budget=budget):
            embs = block_embeddings(g)
            for k in ks:
                small_faces = set()
                for emb in embs:
                    small_faces |= {frozenset(f.edges) for f in emb.faces if f.size <= k - 1}
                classes = [c for emb in embs for c in k_face_classes(emb, k)]
                for c in classes:
                    for f in small_faces:
                        if f & c and not f <= c:
                            yield g, k, f"small face {sorted(f)} split across classes"
                    if c not in class_cache:
                        if len(c) == 1:
                            class_cache[c] = (True, frozenset())
                        else:
                            try:
                                cemb = embed_block(c)
                                ok = len(cemb.edges) == len(c)
                                class_cache[c] = (ok, frozenset(frozenset(f.edges) for f in cemb.faces))
                            except NotOuterplanar:
                                class_cache[c] = (False, frozenset())
                    ok, faces = class_cache[c]
                    if not ok:
                        yield g, k, f"class {sorted(c)} is neither K2 nor 2-connected outerplane"
                    elif not faces <= small_faces:
                        yield g, k, f"class {sorted(c)} has a face that is not a small face of g"
                if len(embs) == 1 and embs[0].n == g.n and g.n >= 3:
                    trivial = all(f.size <= k - 1 for f in embs[0].faces)
                    if trivial and len(classes) != 1:
                        yield g, k, "trivial k-block split into several classes"

