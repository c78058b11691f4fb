"""Structural laws of maximal nontraceable graphs as executable checks.

Every checker takes the MNT premise for granted and reports each place where
``g`` contradicts the conclusion.  On a certified MNT graph an empty list is
the expected outcome; on other graphs the checkers serve as negative
controls.  Each :class:`Violation` carries evidence that can be re-checked
against the graph.

Law identifiers:

``path_neighbor``
    A path whose vertex set is not a clique has an internal vertex with a
    neighbour off the path.
``cutset_components`` / ``cutset_complete``
    Removing ``T`` leaves at most ``|T| + 2`` components, and when exactly
    ``|T| + 2`` remain each ``T`` plus a component induces a clique.
``block_cut_vertices`` / ``four_complete_blocks_as_interpreted``
    No block holds more than three cut-vertices; if one holds exactly three,
    the whole graph is four complete blocks (the source statement names the
    block itself here, which cannot be meant literally).
``deg2_*``
    Neighbourhood structure around vertices of degree 2.
``size_*``
    Edge-count lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bounds import lower_bound_g
from .classify import mnh as is_mnh_graph
from .graph import Graph, GraphError, bits, blocks_and_cut_vertices, component_masks, is_connected

ROUTINE_MAX_LEN = 6
ROUTINE_MAX_T = 4
EXHAUSTIVE_MAX_N = 10


@dataclass(frozen=True)
class Violation:
    law: str
    evidence: tuple
    detail: str

    def as_dict(self) -> dict:
        return {"law": self.law, "evidence": _jsonable(self.evidence), "detail": self.detail}


def _jsonable(x):
    if isinstance(x, (tuple, list, frozenset, set)):
        items = sorted(x) if isinstance(x, (frozenset, set)) else x
        return [_jsonable(i) for i in items]
    return x


# -- paths --------------------------------------------------------------


def _path_through(g: Graph, start: int, end: int, mask: int) -> tuple[int, ...]:
    """Some path from ``start`` to ``end`` covering exactly ``mask``."""
    path = [start]

    def rec(cur: int, left: int) -> bool:
        if not left:
            return cur == end
        for w in bits(g.adj[cur] & left):
            if w == end and left != 1 << end:
                continue
            path.append(w)
            if rec(w, left ^ (1 << w)):
                return True
            path.pop()
        return False

    if not rec(start, mask ^ (1 << start)):
        raise AssertionError("no path for a reachable state")
    return tuple(path)


def check_path_neighbor_law(g: Graph, max_len: int | None = None) -> list[Violation]:
    """Paths on at most ``max_len`` vertices (default ``min(n, 6)``).

    Paths are explored as (vertex set, end pair) states, since the law only
    depends on those; one violating path per state is reported.
    """
    n = g.n
    cap = min(n, ROUTINE_MAX_LEN) if max_len is None else min(max_len, n)
    adj = g.adj
    full = g.full_mask
    found: list[Violation] = []
    for s in range(n):
        layer = {1 << s: 1 << s}
        for size in range(2, cap + 1):
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                for e in bits(ends):
                    for w in bits(adj[e] & ~mask):
                        m2 = mask | (1 << w)
                        nxt[m2] = nxt.get(m2, 0) | (1 << w)
            layer = nxt
            if size < 3:
                continue
            for mask, ends in layer.items():
                if g.is_clique(mask):
                    continue
                outside = full & ~mask
                for e in bits(ends >> s << s):
                    if e == s:
                        continue
                    internal = mask & ~(1 << s) & ~(1 << e)
                    if any(adj[i] & outside for i in bits(internal)):
                        continue
                    path = _path_through(g, s, e, mask)
                    found.append(Violation(
                        "path_neighbor", path,
                        f"path {path} spans a non-clique but no internal vertex has a neighbour off the path",
                    ))
    return found


# -- cutsets and blocks -------------------------------------------------


def _require_connected(g: Graph, law: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{law} needs a connected graph")


def check_cutset_law(g: Graph, max_t: int | None = None) -> list[Violation]:
    """Cutsets of size at most ``max_t`` (default ``min(n - 2, 4)``)."""
    _require_connected(g, "cutset law")
    n = g.n
    cap = min(n - 2, ROUTINE_MAX_T) if max_t is None else min(max_t, n - 2)
    found: list[Violation] = []
    for t in range(1, cap + 1):
        for tset in combinations(range(n), t):
            tmask = sum(1 << v for v in tset)
            comps = component_masks(g, g.full_mask & ~tmask)
            k = len(comps)
            if k < 2:
                continue
            if k > t + 2:
                found.append(Violation(
                    "cutset_components", (tset, k),
                    f"removing {tset} leaves {k} > {t + 2} components",
                ))
            elif k == t + 2:
                for comp in comps:
                    if not g.is_clique(tmask | comp):
                        part = tuple(bits(comp))
                        found.append(Violation(
                            "cutset_complete", (tset, part),
                            f"removing {tset} leaves {k} components but T with {part} is not a clique",
                        ))
    return found


def check_block_law_as_interpreted(g: Graph) -> list[Violation]:
    _require_connected(g, "block law")
    blocks, cuts = blocks_and_cut_vertices(g)
    found: list[Violation] = []
    cutmask = sum(1 << v for v in cuts)
    for block in blocks:
        bmask = sum(1 << v for v in block)
        inside = tuple(bits(bmask & cutmask))
        if len(inside) > 3:
            found.append(Violation(
                "block_cut_vertices", (tuple(sorted(block)), inside),
                f"block {sorted(block)} holds {len(inside)} cut-vertices",
            ))
        elif len(inside) == 3:
            incomplete = [tuple(sorted(b)) for b in blocks if not g.is_clique(sum(1 << v for v in b))]
            if len(blocks) != 4 or incomplete:
                found.append(Violation(
                    "four_complete_blocks_as_interpreted", (tuple(sorted(block)), len(blocks), tuple(incomplete)),
                    f"block {sorted(block)} holds 3 cut-vertices but the graph has {len(blocks)} blocks"
                    f" with non-complete blocks {incomplete}",
                ))
    return found


# -- degree-2 structure -------------------------------------------------


def check_degree2_laws(g: Graph) -> list[Violation]:
    """Degree-2 neighbourhood laws; disconnected graphs are out of scope and
    yield no violations."""
    if g.n < 2 or not is_connected(g):
        return []
    deg = g.degrees()
    adj = g.adj
    found: list[Violation] = []
    deg2 = [v for v in range(g.n) if deg[v] == 2]

    for v in deg2:
        x1, x2 = bits(adj[v])
        if not g.has_edge(x1, x2):
            found.append(Violation("deg2_neighbors_adjacent", (v, x1, x2),
                                   f"neighbours {x1}, {x2} of degree-2 vertex {v} are not adjacent"))
        d1, d2 = deg[x1], deg[x2]
        ok = (d1 >= 4 and (d2 == 2 or d2 >= 4)) or (d2 >= 4 and (d1 == 2 or d1 >= 4))
        if not ok:
            found.append(Violation("deg2_neighbor_degrees", (v, (x1, d1), (x2, d2)),
                                   f"degree-2 vertex {v} has neighbour degrees {d1}, {d2}"))

    for v1, v2 in combinations(deg2, 2):
        if g.has_edge(v1, v2):
            continue
        common = adj[v1] & adj[v2]
        shared = list(bits(common))
        if len(shared) == 1:
            x = shared[0]
            if deg[x] < 5:
                found.append(Violation("deg2_one_common_neighbor", (v1, v2, x),
                                       f"{v1}, {v2} share only {x}, which has degree {deg[x]} < 5"))
        elif len(shared) == 2:
            x1, x2 = shared
            if adj[x1] & ~(1 << x2) != adj[x2] & ~(1 << x1):
                found.append(Violation("deg2_twin_neighborhoods", (v1, v2, x1, x2),
                                       f"{x1} and {x2} (shared by {v1}, {v2}) have different neighbourhoods"))
            if deg[x1] != deg[x2] or deg[x1] < 5:
                found.append(Violation("deg2_twin_degrees", (v1, v2, (x1, deg[x1]), (x2, deg[x2])),
                                       f"shared neighbours {x1}, {x2} have degrees {deg[x1]}, {deg[x2]}"))

    if g.n >= 6:
        for v1, v2, v3 in combinations(deg2, 3):
            if not adj[v1] == adj[v2] == adj[v3]:
                continue
            rest = g.full_mask & ~((1 << v1) | (1 << v2) | (1 << v3))
            if not g.is_clique(rest):
                found.append(Violation("deg2_triple_clique", (v1, v2, v3),
                                       f"removing {v1}, {v2}, {v3} does not leave a clique"))
            e, n = g.size(), g.n
            if 2 * e != n * n - 7 * n + 24:
                found.append(Violation("deg2_triple_size", (v1, v2, v3, e),
                                       f"size {e} differs from (n^2 - 7n + 24)/2 = {(n * n - 7 * n + 24) / 2}"))
    return found


# -- sizes --------------------------------------------------------------


def check_size_theorems(g: Graph, mnh: bool | None = None) -> list[Violation]:
    """Edge-count lower bounds.

    The MNT bounds are applied unconditionally.  The MNH bound is applied
    when ``mnh`` is true; ``None`` means decide it here.
    """
    n, e = g.n, g.size()
    deg = g.degrees()
    found: list[Violation] = []

    if n >= 7 and is_connected(g) and min(deg) >= 2:
        twos = [v for v in range(n) if deg[v] == 2]
        adjacent_twos = any(g.has_edge(a, b) for a, b in combinations(twos, 2))
        m = len(twos)
        if not adjacent_twos and 2 * e < 3 * n + m:
            found.append(Violation("size_degree2_bound", (n, m, e),
                                   f"e = {e} < (3n + m)/2 = {(3 * n + m) / 2}"))

    if n >= 2:
        low = lower_bound_g(n)
        if e < low:
            found.append(Violation("size_mnt_minimum", (n, e, low),
                                   f"e = {e} below the MNT minimum {low} for n = {n}"))

    if n >= 6:
        if mnh is None:
            mnh = is_mnh_graph(g)
        if mnh and 2 * e < 3 * n:
            found.append(Violation("size_mnh_bound", (n, e),
                                   f"MNH graph with e = {e} < 3n/2 = {3 * n / 2}"))
    return found


# -- all together -------------------------------------------------------


@dataclass
class LawReport:
    certified_mnt: bool | None
    violations: list[Violation] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    exhaustive: bool = False

    @property
    def label(self) -> str:
        return "consistency check" if self.certified_mnt else "negative control"

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "certified_mnt": self.certified_mnt,
            "exhaustive": self.exhaustive,
            "skipped": self.skipped,
            "violations": [v.as_dict() for v in self.violations],
        }


def check_all(g: Graph, exhaustive: bool = False, certified_mnt: bool | None = None,
              mnh: bool | None = None) -> LawReport:
    """Run every checker.  ``exhaustive`` lifts the path and cutset caps
    (allowed for ``n <= 10``)."""
    if exhaustive and g.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive law checks are limited to n <= {EXHAUSTIVE_MAX_N}")
    report = LawReport(certified_mnt, exhaustive=exhaustive)
    max_len = g.n if exhaustive else None
    max_t = g.n if exhaustive else None
    report.violations += check_path_neighbor_law(g, max_len)
    if is_connected(g):
        report.violations += check_cutset_law(g, max_t)
        report.violations += check_block_law_as_interpreted(g)
    else:
        report.skipped += ["cutset", "block"]
    report.violations += check_degree2_laws(g)
    report.violations += check_size_theorems(g, mnh)
    return report
