"""Extremal graph constructions and certificates.

Every abstract block is realised as a fan: an apex joined to every vertex of
a path. When a fan is glued onto an edge ``(x, y)``, the apex goes to ``x`` and
the first path vertex to ``y``. Vertices are numbered in construction order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import detect
from .errors import DomainError, Infeasible
from .formulas import (
    Family, Regime, ceil_div, cycle_lambda, ex_cycle, ex_path, ex_path_bounded, ex_path_connected,
    path_regime,
)
from .graph import Graph, canon, disjoint_union, to_graph6
from .outerplane import is_outerplanar

EXACT_PATH_CHECK_MAX_N = 20
SCHEMA_VERSION = 1


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: set = set()

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.add(canon(u, v))

    def fan_on(self, x: int, y: int, m: int) -> int:
        """Glue fan(m) onto edge xy; return the last path vertex (y when m == 2)."""
        self.edge(x, y)
        last = y
        for _ in range(m - 2):
            p = self.vertex()
            self.edge(x, p)
            self.edge(last, p)
            last = p
        return last

    def graph(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))


def fan(m: int) -> Graph:
    """Apex 0 joined to every vertex of the path 1..m-1."""
    if m < 2:
        raise DomainError(f"fan needs at least 2 vertices, got {m}")
    b = _Builder()
    x, y = b.vertex(), b.vertex()
    b.fan_on(x, y, m)
    return b.graph()


@dataclass(frozen=True)
class BlockSpec:
    orders: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        if self.k < 3:
            raise DomainError(f"k must be at least 3, got {self.k}")
        if not self.orders:
            raise DomainError("at least one block is required")
        bad = [m for m in self.orders if not 2 <= m <= self.k - 1]
        if bad:
            raise DomainError(f"block orders must lie in [2, {self.k - 1}], got {bad}")

    @property
    def t(self) -> int:
        return len(self.orders)

    def min_order(self) -> int:
        """Smallest order of a connected C_k-free graph with these k-blocks."""
        return sum(self.orders) - (self.t - 1) // self.k - self.t + 1


def assemble_blocks(spec: BlockSpec) -> Graph:
    """Minimum-order connected C_k-free outerplanar graph with the given k-blocks.

    The first ``b`` blocks hang on the edges of a path; every later group of
    ``k`` blocks hangs on ``k`` edges of a (k+1)-cycle whose remaining edge is
    glued onto an outer edge of the previous group. The (k+1)-faces keep the
    groups in separate k-blocks and every cycle through one has length > k.
    """
    k, orders = spec.k, spec.orders
    t = len(orders)
    a = (t - 1) // k
    b = t - k * a
    g = _Builder()
    prev = g.vertex()
    for i in range(b):
        nxt = g.vertex()
        g.fan_on(prev, nxt, orders[i])
        glue = (prev, nxt)
        prev = nxt
    for s in range(a):
        p, q = glue
        ring = [p] + [g.vertex() for _ in range(k - 1)] + [q]
        first = b + s * k
        new_glue = None
        for i in range(k):
            last = g.fan_on(ring[i], ring[i + 1], orders[first + i])
            if i == 0:
                new_glue = (ring[0], last)
        glue = new_glue
    out = g.graph()
    assert out.n == spec.min_order(), (out.n, spec.min_order())
    return out


def cactus(orders) -> Graph:
    """Fans of the given orders sharing their apex, which is vertex 0."""
    orders = list(orders)
    if not orders or any(m < 2 for m in orders):
        raise DomainError(f"cactus block orders must be >= 2, got {orders}")
    g = _Builder()
    hub = g.vertex()
    for m in orders:
        g.fan_on(hub, g.vertex(), m)
    return g.graph()


def matching(n: int) -> Graph:
    """floor(n/2) disjoint edges, plus an isolated vertex when n is odd."""
    return Graph(n, frozenset((2 * i, 2 * i + 1) for i in range(n // 2)))


_TARGETS = {
    "ex": lambda fam, n, k: (ex_cycle if fam is Family.CYCLE else ex_path)(n, k).value,
    "ex_connected": lambda fam, n, k: ex_path_connected(n, k).value,
    "ex_bounded": lambda fam, n, k: ex_path_bounded(n, k).value,
}


@dataclass
class Certificate:
    """An extremal graph with machine-checked evidence.

    ``target`` names the formula the size is checked against: the Turán number
    itself (``"ex"``) or one of the two restricted path variants.
    """

    graph: Graph
    family: Family
    k: int
    claimed_order: int
    claimed_size: int
    target: str = "ex"
    checks: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def graph6(self) -> str:
        return to_graph6(self.graph)

    def sidecar(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.claimed_order,
            "k": self.k,
            "family": self.family.value,
            "target": self.target,
            "size": self.claimed_size,
            "graph6": self.graph6(),
            "edges": [list(e) for e in self.graph.edge_list],
            "checks": dict(self.checks),
            "status": "VALID" if self.valid else "INVALID",
        }

    def to_json(self) -> str:
        return json.dumps(self.sidecar(), sort_keys=True, separators=(",", ":"))


def verify_certificate(cert: Certificate) -> Certificate:
    """Recompute ``cert.checks`` from the graph alone."""
    g = cert.graph
    k = cert.k
    expected = _TARGETS[cert.target](cert.family, cert.claimed_order, k)
    if cert.family is Family.CYCLE:
        forbidden_free = not detect.has_cycle_len(g, k)
    else:
        bound = detect.longest_path_upper_bound(g)
        cert.notes["longest_path_bound"] = bound
        forbidden_free = bound <= k - 2
        if g.n <= EXACT_PATH_CHECK_MAX_N:
            exact = detect.longest_path_len(g)
            cert.notes["longest_path"] = exact
            forbidden_free = forbidden_free and exact <= k - 2 and exact <= bound
    cert.checks = {
        "outerplanar": is_outerplanar(g),
        "forbidden_free": forbidden_free,
        "formula_match": g.n == cert.claimed_order and g.m == cert.claimed_size == expected,
    }
    return cert


def _certify(g: Graph, family: Family, n: int, k: int, target: str = "ex", **notes) -> Certificate:
    value = _TARGETS[target](family, n, k)
    return verify_certificate(Certificate(g, family, k, n, value, target, notes=dict(notes)))


def cycle_block_orders(n: int, k: int) -> list[int]:
    """Fan orders of the extremal C_k-free graph, n >= k."""
    lam = cycle_lambda(n, k)
    orders = [k - 1] * (lam - 1) + [n + (lam - 1) // k - (lam - 1) * (k - 2)]
    if lam % k == 0:
        orders.append(2)
    return orders


def extremal_cycle_graph(n: int, k: int) -> Certificate:
    if k < 3 or n < 1:
        raise DomainError(f"need n >= 1 and k >= 3, got n={n}, k={k}")
    if n == 1:
        return _certify(Graph(1), Family.CYCLE, n, k)
    if n < k:
        return _certify(fan(n), Family.CYCLE, n, k, blocks=[n])
    orders = cycle_block_orders(n, k)
    return _certify(assemble_blocks(BlockSpec(orders, k)), Family.CYCLE, n, k, blocks=orders)


def path_cactus_orders(n: int, k: int) -> list[int]:
    """Block orders of the smallest P_k-free cactus on n vertices (n >= k >= 4)."""
    if k < 4 or n < k:
        raise DomainError(f"need n >= k >= 4, got n={n}, k={k}")
    h = k // 2
    t = ceil_div(n - k + 2 * h - 1, h - 1)
    shortfall = t * (h - 1) - (n - k + 2 * h - 1)
    orders = [k - h] + [h] * (t - 2) + [h - shortfall]
    assert sum(m - 1 for m in orders) + 1 == n
    return orders


def extremal_path_connected_graph(n: int, k: int) -> Certificate:
    orders = path_cactus_orders(n, k)
    return _certify(cactus(orders), Family.PATH, n, k, "ex_connected", cactus=orders)


def path_component_orders(n: int, k: int) -> list[int]:
    if k < 4 or n < k:
        raise DomainError(f"need n >= k >= 4, got n={n}, k={k}")
    s = ceil_div(n, k - 1)
    return [k - 1] * (s - 1) + [n - (s - 1) * (k - 1)]


def _bounded_graph(orders) -> Graph:
    return disjoint_union(Graph(1) if m == 1 else fan(m) for m in orders)


def extremal_path_bounded_graph(n: int, k: int) -> Certificate:
    orders = path_component_orders(n, k)
    return _certify(_bounded_graph(orders), Family.PATH, n, k, "ex_bounded", components=orders)


def extremal_path_graph(n: int, k: int) -> Certificate:
    if k < 3 or n < 1:
        raise DomainError(f"need n >= 1 and k >= 3, got n={n}, k={k}")
    if k == 3:
        return _certify(matching(n), Family.PATH, n, k)
    if n < k:
        return _certify(_bounded_graph([n]), Family.PATH, n, k)
    if path_regime(n, k) is Regime.CONNECTED_WINS:
        orders = path_cactus_orders(n, k)
        return _certify(cactus(orders), Family.PATH, n, k, cactus=orders)
    orders = path_component_orders(n, k)
    return _certify(_bounded_graph(orders), Family.PATH, n, k, components=orders)


def realize_block_profile(n: int, m: int, k: int) -> Graph:
    """Connected C_k-free outerplanar graph of order n and size m whose inner
    faces are all triangles, built as a cactus of fans."""
    t = 2 * n - 2 - m
    if k < 3 or t < 1 or t > n - 1 or t * (k - 2) < n - 1:
        raise Infeasible(f"no block profile for n={n}, m={m}, k={k}")
    parts = []
    left = n - 1
    for i in range(t):
        p = min(k - 2, left - (t - i - 1))
        parts.append(p)
        left -= p
    return cactus([p + 1 for p in parts])
