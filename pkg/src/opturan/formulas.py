"""Closed-form outerplanar Turán numbers of cycles and paths.

All arithmetic is exact integer floor/ceiling on nonnegative operands.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DomainError


class Family(str, enum.Enum):
    CYCLE = "cycle"
    PATH = "path"


class Regime(str, enum.Enum):
    """Which path construction attains the maximum."""

    CONNECTED_WINS = "ConnectedWins"
    BOUNDED_WINS = "BoundedWins"
    TIE = "Tie"

    @property
    def short(self) -> str:
        return {"ConnectedWins": "connected", "BoundedWins": "bounded", "Tie": "tie"}[self.value]


@dataclass(frozen=True)
class TuranValue:
    n: int
    k: int
    family: Family
    value: int
    params: dict = field(default_factory=dict, compare=False)

    @property
    def boundary(self) -> bool:
        return bool(self.params.get("boundary"))


def ceil_div(a: int, b: int) -> int:
    assert a >= 0 and b > 0, (a, b)
    return (a + b - 1) // b


def _check_k(k: int, least: int = 3) -> None:
    if k < least:
        raise DomainError(f"k must be at least {least}, got {k}")


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


def cycle_lambda(n: int, k: int) -> int:
    """Number of fan blocks in the extremal C_k-free construction."""
    _check_k(k)
    if n < k:
        raise DomainError(f"lambda needs n >= k, got n={n}, k={k}")
    return (k * n - 2 * k - 1) // (k * k - 2 * k - 1) + 1


def ex_cycle(n: int, k: int) -> TuranValue:
    _check_k(k)
    _check_n(n)
    if n == 1:
        return TuranValue(n, k, Family.CYCLE, 0, {"boundary": True})
    if n < k:
        return TuranValue(n, k, Family.CYCLE, 2 * n - 3, {"boundary": True})
    lam = cycle_lambda(n, k)
    value = 2 * n - lam + 2 * (lam // k) - (3 if lam % k == 0 else 2)
    return TuranValue(n, k, Family.CYCLE, value, {"lambda": lam, "divisible": lam % k == 0})


def _check_path_domain(n: int, k: int) -> None:
    _check_k(k, 4)
    if n < k:
        raise DomainError(f"need n >= k, got n={n}, k={k}")


def path_min_blocks(n: int, k: int) -> int:
    """Fewest fan blocks of a connected P_k-free cactus on n vertices."""
    _check_path_domain(n, k)
    h = k // 2
    return ceil_div(n - k + 2 * h - 1, h - 1)


def ex_path_connected(n: int, k: int) -> TuranValue:
    """Largest size of a connected P_k-free outerplanar graph."""
    _check_path_domain(n, k)
    h = k // 2
    value = 2 * n - ceil_div(n - k + 1, h - 1) - 4
    min_t = path_min_blocks(n, k)
    assert value == 2 * n - min_t - 2
    return TuranValue(n, k, Family.PATH, value, {"min_t": min_t})


def ex_path_bounded(n: int, k: int) -> TuranValue:
    """Largest size of a P_k-free outerplanar graph with components of order <= k-1."""
    _check_path_domain(n, k)
    s = ceil_div(n, k - 1)
    value = 2 * n - 3 * s + (1 if n % (k - 1) == 1 else 0)
    return TuranValue(n, k, Family.PATH, value, {"components": s})


def path_regime(n: int, k: int) -> Regime:
    diff = ex_path_connected(n, k).value - ex_path_bounded(n, k).value
    if diff > 0:
        return Regime.CONNECTED_WINS
    if diff < 0:
        return Regime.BOUNDED_WINS
    return Regime.TIE


def ex_path(n: int, k: int) -> TuranValue:
    _check_k(k)
    _check_n(n)
    if k == 3:
        return TuranValue(n, k, Family.PATH, n // 2, {"boundary": True})
    if n == 1:
        return TuranValue(n, k, Family.PATH, 0, {"boundary": True})
    if n < k:
        return TuranValue(n, k, Family.PATH, 2 * n - 3, {"boundary": True})
    conn = ex_path_connected(n, k)
    bnd = ex_path_bounded(n, k)
    return TuranValue(
        n, k, Family.PATH, max(conn.value, bnd.value),
        {
            "min_t": conn.params["min_t"],
            "ex_connected": conn.value,
            "ex_bounded": bnd.value,
            "regime": path_regime(n, k),
        },
    )


def ex_value(family: Family | str, n: int, k: int) -> TuranValue:
    return ex_cycle(n, k) if Family(family) is Family.CYCLE else ex_path(n, k)
