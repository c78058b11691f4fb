"""Maximal nontraceable constructions.

Labelling conventions (all deterministic):

* ``disjoint_cliques(k, l)``: ``K_k`` on ``0..k-1``, ``K_l`` on the rest.
* Zelinka graphs: the clique ``K_r`` occupies ``0..r-1``; appendages follow in
  the order given, each a ``K1`` or ``K2`` whose vertices are all joined to
  one attachment vertex.  Type I attaches both appendages to vertex 0; type
  II attaches appendage ``i`` to vertex ``i``.
* DKW: the base keeps its labels; the ``K1`` on ``y1`` is vertex ``n``, the
  ``K1``/``K2`` on ``y2`` takes the remaining new labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from .classify import dkw_eligible
from .graph import MAXN, Graph, GraphError, complete_graph, disjoint_union, from_graph6, named, to_graph6

FAMILIES = ("disjoint_cliques", "zelinka1", "zelinka2", "dkw")


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of one construction instance.

    ``clique_order`` is ``r`` for the Zelinka families and ``k`` for disjoint
    cliques (``second_order`` is ``l`` there).  For ``dkw`` the base is named
    (``base_name``) or given as graph6 (``base_graph6``).
    """

    family: str
    clique_order: int = 0
    appendage_sizes: tuple[int, ...] = ()
    second_order: int = 0
    base_name: str | None = None
    base_graph6: str | None = None
    edge: tuple[int, int] | None = None
    h2_size: int | None = None
    checked: bool = field(default=True, compare=False)

    def base(self) -> Graph:
        if self.base_graph6 is not None:
            return from_graph6(self.base_graph6)
        if self.base_name is None:
            raise ConstructionError("dkw spec needs a base graph")
        return named(self.base_name)

    def build(self) -> Graph:
        if self.family == "disjoint_cliques":
            return disjoint_cliques(self.clique_order, self.second_order)
        if self.family == "zelinka1":
            return zelinka_type1(self.clique_order, self.appendage_sizes)
        if self.family == "zelinka2":
            return zelinka_type2(self.clique_order, self.appendage_sizes)
        if self.family == "dkw":
            y1, y2 = self.edge
            build = dkw_construct if self.checked else dkw_construct_unchecked
            return build(self.base(), y1, y2, self.h2_size)
        raise ConstructionError(f"unknown family {self.family!r}")

    def describe(self) -> str:
        if self.family == "disjoint_cliques":
            return f"K{self.clique_order} u K{self.second_order}"
        if self.family in ("zelinka1", "zelinka2"):
            return f"{self.family}(r={self.clique_order}, sizes={list(self.appendage_sizes)})"
        base = self.base_name or self.base_graph6
        return f"dkw({base}, edge={self.edge}, h2={self.h2_size})"

    def as_dict(self) -> dict:
        d = {"family": self.family, "description": self.describe()}
        if self.family == "dkw":
            d.update(base=self.base_name or self.base_graph6, edge=list(self.edge), h2_size=self.h2_size)
        elif self.family == "disjoint_cliques":
            d.update(clique_order=self.clique_order, second_order=self.second_order)
        else:
            d.update(clique_order=self.clique_order, appendage_sizes=list(self.appendage_sizes))
        return d


def _check_order(n: int) -> None:
    if n > MAXN:
        raise ConstructionError(f"construction order {n} exceeds MAXN={MAXN}")


def _check_sizes(sizes, count: int) -> tuple[int, ...]:
    sizes = tuple(sizes)
    if len(sizes) != count:
        raise ConstructionError(f"expected {count} appendage sizes, got {len(sizes)}")
    if any(s not in (1, 2) for s in sizes):
        raise ConstructionError(f"appendage sizes must be 1 or 2, got {list(sizes)}")
    return sizes


def disjoint_cliques(k: int, l: int) -> Graph:
    if k < 1 or l < 1:
        raise ConstructionError("clique orders must be positive")
    _check_order(k + l)
    return disjoint_union(complete_graph(k), complete_graph(l))


def _with_appendages(r: int, sizes: tuple[int, ...], anchors: list[int]) -> Graph:
    n = r + sum(sizes)
    _check_order(n)
    edges = list(combinations(range(r), 2))
    nxt = r
    for size, y in zip(sizes, anchors):
        members = list(range(nxt, nxt + size))
        edges.extend((y, v) for v in members)
        edges.extend(combinations(members, 2))
        nxt += size
    return Graph.from_edges(n, edges)


def zelinka_type1(r: int, sizes) -> Graph:
    """``K_r`` with two appendages on vertex 0; size ``C(r,2) + 2s - 2``."""
    sizes = _check_sizes(sizes, 2)
    if r < 3:
        raise ConstructionError("zelinka type I needs r >= 3")
    return _with_appendages(r, sizes, [0, 0])


def zelinka_type2(r: int, sizes) -> Graph:
    """``K_r`` with appendages on vertices 0, 1, 2; size ``C(r,2) + 2s - 3``."""
    sizes = _check_sizes(sizes, 3)
    if r < 3:
        raise ConstructionError("zelinka type II needs r >= 3")
    return _with_appendages(r, sizes, [0, 1, 2])


def dkw_construct_unchecked(base: Graph, y1: int, y2: int, h2_size: int) -> Graph:
    if h2_size not in (1, 2):
        raise ConstructionError("h2_size must be 1 or 2")
    if not base.has_edge(y1, y2):
        raise ConstructionError(f"({y1}, {y2}) is not an edge of the base")
    n = base.n
    _check_order(n + 1 + h2_size)
    edges = base.edges() + [(y1, n)]
    h2 = list(range(n + 1, n + 1 + h2_size))
    edges.extend((y2, v) for v in h2)
    edges.extend(combinations(h2, 2))
    return Graph.from_edges(n + 1 + h2_size, edges)


def dkw_construct(base: Graph, y1: int, y2: int, h2_size: int) -> Graph:
    """Attach ``K1`` to ``y1`` and ``K1``/``K2`` to ``y2`` after checking that
    ``y1y2`` is eligible.  Order/size grow by 2/2 or 3/4."""
    if h2_size not in (1, 2):
        raise ConstructionError("h2_size must be 1 or 2")
    _check_order(base.n + 1 + h2_size)
    eligible = dkw_eligible(base)
    if (y1, y2) not in eligible and (y2, y1) not in eligible:
        raise ConstructionError(f"edge ({y1}, {y2}) is not DKW-eligible in the base graph")
    return dkw_construct_unchecked(base, y1, y2, h2_size)


def expected_size(spec: ConstructionSpec) -> int:
    """Closed-form edge count of a construction."""
    s = sum(spec.appendage_sizes)
    if spec.family == "disjoint_cliques":
        return comb(spec.clique_order, 2) + comb(spec.second_order, 2)
    if spec.family == "zelinka1":
        return comb(spec.clique_order, 2) + 2 * s - 2
    if spec.family == "zelinka2":
        return comb(spec.clique_order, 2) + 2 * s - 3
    if spec.family == "dkw":
        return spec.base().size() + 2 * spec.h2_size
    raise ConstructionError(f"unknown family {spec.family!r}")


def expected_order(spec: ConstructionSpec) -> int:
    if spec.family == "disjoint_cliques":
        return spec.clique_order + spec.second_order
    if spec.family in ("zelinka1", "zelinka2"):
        return spec.clique_order + sum(spec.appendage_sizes)
    return spec.base().n + 1 + spec.h2_size


def zelinka_specs(max_order: int, family: str | None = None) -> list[ConstructionSpec]:
    """Every Zelinka parameter set (appendage sizes as sorted multisets,
    largest first) with output order at most ``max_order``."""
    specs = []
    for fam, count in (("zelinka1", 2), ("zelinka2", 3)):
        if family not in (None, fam):
            continue
        for sizes in combinations_with_replacement((2, 1), count):
            for r in range(3, max_order - sum(sizes) + 1):
                specs.append(ConstructionSpec(fam, r, sizes))
    return specs


def disjoint_clique_specs(n: int) -> list[ConstructionSpec]:
    return [ConstructionSpec("disjoint_cliques", k, second_order=n - k) for k in range(1, n // 2 + 1)]


def dkw_specs(base_name: str = "petersen") -> list[ConstructionSpec]:
    """One DKW spec per (eligible edge, h2 size) for a built-in base."""
    base = named(base_name)
    return [
        ConstructionSpec("dkw", base_name=base_name, edge=e, h2_size=h)
        for e in dkw_eligible(base)
        for h in (1, 2)
        if base.n + 1 + h <= MAXN
    ]


def emit(spec: ConstructionSpec) -> str:
    return to_graph6(spec.build())
