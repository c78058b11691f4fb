"""Canonical labelling of small graphs.

``canonical_form`` runs an individualisation/refinement search: the vertex
partition is refined to an equitable ordered partition, then every vertex of
the first smallest non-singleton cell is individualised in turn.  Each
discrete leaf gives a vertex order, and the canonical form is the relabelled
graph whose upper-triangle bit string (graph6 order) is least over all
leaves.  Twins inside a cell are interchangeable by an automorphism that
fixes the rest of the partition, so only one per twin class is explored.

``brute_canonical_form`` minimises the same bit string over all ``n!``
permutations; it is the oracle for the refined search on small orders.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, to_graph6


def _adjacency_key(g: Graph, order: list[int] | tuple[int, ...]) -> int:
    adj = g.adj
    key = 0
    for j in range(1, g.n):
        vj = order[j]
        for i in range(j):
            key = (key << 1) | (adj[order[i]] >> vj & 1)
    return key


def _relabel_by_order(g: Graph, order: list[int] | tuple[int, ...]) -> Graph:
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = [0] * len(cells)
        for idx, cell in enumerate(cells):
            for v in cell:
                masks[idx] |= 1 << v
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for k in keys:
                new_cells.append([v for v in cell if sig[v] == k])
        cells = new_cells
        if not changed:
            return cells


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        if not any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling yields the canonical form."""
    if g.n <= 1:
        return list(range(g.n))
    adj = g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    root = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_key = -1
    best_order: list[int] = []

    stack = [root]
    while stack:
        cells = stack.pop()
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            key = _adjacency_key(g, order)
            if best_key < 0 or key < best_key:
                best_key, best_order = key, order
            continue
        cell = cells[target]
        for v in reversed(_twin_representatives(adj, cell)):
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            stack.append(_refine(adj, child))
    return best_order


def canonical_form(g: Graph) -> Graph:
    return _relabel_by_order(g, canonical_order(g))


def canonical_key(g: Graph) -> str:
    """graph6 string of the canonical form; equal keys iff isomorphic."""
    return to_graph6(canonical_form(g))


def brute_canonical_form(g: Graph) -> Graph:
    """Least adjacency bit string over all vertex orders (small ``n`` only)."""
    if g.n > 9:
        raise ValueError("brute-force canonical form limited to n <= 9")
    best = min(permutations(range(g.n)), key=lambda order: _adjacency_key(g, order))
    return _relabel_by_order(g, best)


def brute_canonical_key(g: Graph) -> str:
    return to_graph6(brute_canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size() != h.size() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
