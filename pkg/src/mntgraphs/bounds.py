"""Lower and constructive upper bounds for g(n), the minimum size of a
maximal nontraceable graph of order n, and the per-order status table."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .classify import mnt
from .constructions import (
    ConstructionSpec,
    disjoint_clique_specs,
    dkw_specs,
    expected_order,
    expected_size,
    zelinka_specs,
)
from .graph import MAXN, Graph

SMALL_G = {2: 0, 3: 1, 4: 2, 5: 4, 6: 6, 7: 8, 8: 10, 9: 12}

# orders with a cubic MNH base of order n - 2 or n - 3 in the literature
EXTERNAL_KNOWN = frozenset({22, 23, 30, 31, 38, 39, 40, 41, 42, 43, 46, 47, 48, 49, 50, 51})
EXTERNAL_THRESHOLD = 54
LOCAL_DKW_ORDERS = frozenset({12, 13})

SMALL_MNH = {4: 4, 5: 6, 6: 9}


def ceil_half(x: int) -> int:
    return -(-x // 2)


def general_lower(n: int) -> int:
    return ceil_half(3 * n - 2)


def lower_bound_g(n: int) -> int:
    if n < 2:
        raise ValueError("g(n) is defined for n >= 2")
    if n in SMALL_G:
        return SMALL_G[n]
    return general_lower(n)


@dataclass(frozen=True)
class UpperBound:
    value: int
    spec: ConstructionSpec
    graph: Graph


@lru_cache(maxsize=None)
def best_known_upper_g(n: int) -> UpperBound | None:
    """Smallest classifier-verified MNT construction of order ``n``.

    Candidates: two disjoint cliques, both Zelinka families, and DKW graphs
    over the built-in Petersen base.  ``None`` beyond ``MAXN``.
    """
    if n < 2:
        raise ValueError("g(n) is defined for n >= 2")
    if n > MAXN:
        return None
    candidates = disjoint_clique_specs(n)
    candidates += [s for s in zelinka_specs(n) if expected_order(s) == n]
    if n in LOCAL_DKW_ORDERS:
        candidates += [s for s in _petersen_dkw_specs() if expected_order(s) == n]
    # stable sort keeps the family order above among equal sizes
    for spec in sorted(candidates, key=expected_size):
        g = spec.build()
        if mnt(g):
            return UpperBound(g.size(), spec, g)
    return None


@lru_cache(maxsize=1)
def _petersen_dkw_specs():
    return tuple(dkw_specs("petersen"))


@dataclass(frozen=True)
class BoundStatus:
    n: int
    lower: int
    upper: int | None
    status: str
    provenance: tuple[str, ...] = field(default=())
    witness: ConstructionSpec | None = None  # backs ``upper`` when built locally

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "upper": self.upper,
            "status": self.status,
            "provenance": list(self.provenance),
            "witness": self.witness.as_dict() if self.witness is not None else None,
        }


def g_status(n: int) -> BoundStatus:
    lower = lower_bound_g(n)
    best = best_known_upper_g(n)
    local = (f"local witness {best.spec.describe()} with {best.value} edges",) if best else ()
    if n in SMALL_G:
        return BoundStatus(n, lower, best.value, "known",
                           ("small orders: exact values, recomputable by exhaustive search",) + local,
                           best.spec)
    if n in LOCAL_DKW_ORDERS:
        return BoundStatus(n, lower, best.value, "known",
                           ("lower: minimum-size theorem", "upper: DKW construction on the Petersen graph") + local,
                           best.spec)
    if n in EXTERNAL_KNOWN or n >= EXTERNAL_THRESHOLD:
        return BoundStatus(n, lower, lower, "known",
                           ("lower: minimum-size theorem",
                            "upper: DKW construction on cubic MNH bases from cited work (external, not built here)")
                           + local, None)
    return BoundStatus(n, lower, best.value if best else None, "open",
                       ("lower: minimum-size theorem",) + (local or ("no local construction beyond MAXN",)),
                       best.spec if best else None)


def parse_range(text: str) -> range:
    """``"8..13"`` -> range(8, 14); a single number is a one-element range."""
    a, sep, b = text.partition("..")
    lo = int(a)
    hi = int(b) if sep else lo
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def status_table(ns) -> list[BoundStatus]:
    return [g_status(n) for n in ns]


def format_table(rows: list[BoundStatus]) -> str:
    lines = [f"{'n':>3}  {'lower':>5}  {'upper':>5}  {'status':<6}  provenance"]
    for r in rows:
        up = "-" if r.upper is None else str(r.upper)
        lines.append(f"{r.n:>3}  {r.lower:>5}  {up:>5}  {r.status:<6}  {'; '.join(r.provenance)}")
    return "\n".join(lines)
