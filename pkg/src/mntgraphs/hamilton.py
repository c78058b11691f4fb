"""Exact Hamiltonian path and cycle decisions.

Two engines answer every query:

* ``"dp"``: subset dynamic programming over (vertex set, endpoint) states,
  stored as one endpoint bitmask per vertex subset.
* ``"backtrack"``: depth-first extension.  A branch is cut only when the
  unvisited vertices provably admit no Hamiltonian path continuing the
  current one: their block-cut tree is not a path, the current end has no
  neighbour that could start such a path, or two of them are left with a
  single usable neighbour.

Neither engine prunes a branch that could still succeed, so both report the
lexicographically least Hamiltonian path (or least cycle starting at vertex
0).  ``"auto"`` uses ``"dp"`` up to ``DP_MAX_N`` vertices.

``naive_traceable``/``naive_hamiltonian`` are the independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Literal

from .graph import Graph, GraphError, bits, component_masks

DP_MAX_N = 12
NAIVE_MAX_N = 12

Engine = Literal["auto", "dp", "backtrack"]


@dataclass(frozen=True)
class Witness:
    kind: Literal["path", "cycle"]
    order: tuple[int, ...]


def validate_witness(g: Graph, w: Witness) -> bool:
    """Independent re-check of a Hamiltonian path or cycle."""
    seq = w.order
    if sorted(seq) != list(range(g.n)):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    if w.kind == "cycle":
        return g.n >= 3 and g.has_edge(seq[-1], seq[0])
    return True


def _pick_engine(g: Graph, engine: Engine) -> str:
    if engine == "auto":
        return "dp" if g.n <= DP_MAX_N else "backtrack"
    if engine not in ("dp", "backtrack"):
        raise ValueError(f"unknown engine {engine!r}")
    return engine


# -- subset DP ---------------------------------------------------------


def _path_table(adj: tuple[int, ...], n: int, seeds: int, avoid: int = 0) -> list[int]:
    """``table[S]`` = vertices ``v`` such that some path covering exactly ``S``
    starts in ``seeds`` and ends at ``v``.  Vertices in ``avoid`` are never used.
    """
    table = [0] * (1 << n)
    for v in bits(seeds & ~avoid):
        table[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = table[mask]
        if not ends:
            continue
        free = ~mask & ~avoid
        while ends:
            low = ends & -ends
            ends ^= low
            ext = adj[low.bit_length() - 1] & free
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                table[mask | wbit] |= wbit
    return table


def _dp_traceable(g: Graph, want_witness: bool) -> tuple[bool, Witness | None]:
    full = g.full_mask
    table = _path_table(g.adj, g.n, full)
    if not table[full]:
        return False, None
    if not want_witness:
        return True, None
    # table is symmetric under reversal, so table[S] also lists valid starts.
    cur = (table[full] & -table[full]).bit_length() - 1
    order = [cur]
    rem = full ^ (1 << cur)
    while rem:
        cand = g.adj[cur] & table[rem]
        cur = (cand & -cand).bit_length() - 1
        order.append(cur)
        rem ^= 1 << cur
    return True, Witness("path", tuple(order))


def _dp_closing_table(g: Graph, anchor: int) -> list[int]:
    # table[S] (S excludes anchor) = vertices starting a path that covers S
    # and finishes next to ``anchor``.
    return _path_table(g.adj, g.n, g.adj[anchor], avoid=1 << anchor)


def _dp_hamiltonian(g: Graph, want_witness: bool) -> tuple[bool, Witness | None]:
    rest = g.full_mask ^ 1
    table = _dp_closing_table(g, 0)
    if not g.adj[0] & table[rest]:
        return False, None
    if not want_witness:
        return True, None
    cur, order = 0, [0]
    while rest:
        cand = g.adj[cur] & table[rest]
        cur = (cand & -cand).bit_length() - 1
        order.append(cur)
        rest ^= 1 << cur
    return True, Witness("cycle", tuple(order))


def _dp_uv_path(g: Graph, u: int, v: int) -> bool:
    table = _path_table(g.adj, g.n, 1 << u)
    return bool(table[g.full_mask] >> v & 1)


# -- backtracking ------------------------------------------------------


def _block_masks(adj: tuple[int, ...], within: int) -> list[int] | None:
    """Blocks (as vertex masks) of the subgraph induced by ``within``, or
    ``None`` if that subgraph is disconnected."""
    root = (within & -within).bit_length() - 1
    disc = {root: 0}
    low = {root: 0}
    timer = 1
    blocks: list[int] = []
    vstack = [root]
    stack = [(root, -1, adj[root] & within)]
    while stack:
        v, parent, todo = stack[-1]
        if todo:
            wbit = todo & -todo
            stack[-1] = (v, parent, todo ^ wbit)
            w = wbit.bit_length() - 1
            if w not in disc:
                disc[w] = low[w] = timer
                timer += 1
                vstack.append(w)
                stack.append((w, v, adj[w] & within))
            elif w != parent and disc[w] < low[v]:
                low[v] = disc[w]
            continue
        stack.pop()
        if parent < 0:
            continue
        if low[v] < low[parent]:
            low[parent] = low[v]
        if low[v] >= disc[parent]:
            block = 1 << parent
            while True:
                x = vstack.pop()
                block |= 1 << x
                if x == v:
                    break
            blocks.append(block)
    if len(disc) != within.bit_count():
        return None
    if not blocks:
        blocks.append(within)
    return blocks


def _path_starts(adj: tuple[int, ...], within: int) -> int:
    """Vertices that can start a Hamiltonian path of the subgraph induced by
    ``within`` (0 when there is none).

    Necessary condition only: the block-cut tree must be a path, and a
    Hamiltonian path starts at a non-cut vertex of an end block.
    """
    size = within.bit_count()
    if size <= 2:
        if size == 2:
            a = (within & -within).bit_length() - 1
            return within if adj[a] & within else 0
        return within
    blocks = _block_masks(adj, within)
    if blocks is None:
        return 0
    if len(blocks) == 1:
        return within
    seen = cut = 0
    for b in blocks:
        cut |= seen & b
        seen |= b
    starts = 0
    for b in blocks:
        k = (b & cut).bit_count()
        if k > 2:
            return 0
        if k == 1:
            starts |= b & ~cut
    for v in bits(cut):
        if sum(1 for b in blocks if b >> v & 1) > 2:
            return 0
    return starts


def _dfs_path(g: Graph, start: int, end_mask: int) -> list[int] | None:
    """Lexicographically least Hamiltonian path from ``start`` ending in ``end_mask``."""
    adj = g.adj
    n = g.n
    if n == 1:
        return [start] if end_mask >> start & 1 else None
    path = [start]

    def next_candidates(cur: int, unvisited: int) -> int:
        if not unvisited & end_mask:
            return 0
        lonely = False
        pool = unvisited | (1 << cur)
        for w in bits(unvisited):
            avail = (adj[w] & pool).bit_count()
            if avail == 0:
                return 0
            if avail == 1:
                if lonely or not end_mask >> w & 1:
                    return 0
                lonely = True
        return adj[cur] & _path_starts(adj, unvisited)

    def extend(cur: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(end_mask >> cur & 1)
        for w in bits(next_candidates(cur, unvisited)):
            path.append(w)
            if extend(w, unvisited ^ (1 << w)):
                return True
            path.pop()
        return False

    return path if extend(start, g.full_mask ^ (1 << start)) else None


def _bt_traceable(g: Graph) -> tuple[bool, Witness | None]:
    for s in bits(_path_starts(g.adj, g.full_mask)):
        found = _dfs_path(g, s, g.full_mask)
        if found is not None:
            return True, Witness("path", tuple(found))
    return False, None


def _bt_hamiltonian(g: Graph) -> tuple[bool, Witness | None]:
    found = _dfs_path(g, 0, g.adj[0])
    if found is None:
        return False, None
    return True, Witness("cycle", tuple(found))


# -- public deciders ---------------------------------------------------


def is_traceable(g: Graph, engine: Engine = "auto", witness: bool = True) -> tuple[bool, Witness | None]:
    """Whether ``g`` has a Hamiltonian path; the witness is the lexicographically
    least one.  ``K1`` is traceable; the null graph is not."""
    if g.n == 0:
        return False, None
    if g.n == 1:
        return True, Witness("path", (0,)) if witness else None
    comps = component_masks(g)
    if len(comps) > 1:
        return False, None
    if sum(1 for nb in g.adj if nb.bit_count() <= 1) > 2:
        return False, None
    if _pick_engine(g, engine) == "dp":
        return _dp_traceable(g, witness)
    ok, w = _bt_traceable(g)
    return ok, (w if witness else None)


def is_hamiltonian(g: Graph, engine: Engine = "auto", witness: bool = True) -> tuple[bool, Witness | None]:
    """Whether ``g`` has a Hamiltonian cycle (needs ``n >= 3``); the witness is
    the lexicographically least cycle written from vertex 0."""
    if g.n < 3:
        return False, None
    if any(nb.bit_count() < 2 for nb in g.adj):
        return False, None
    if len(component_masks(g)) > 1:
        return False, None
    if _pick_engine(g, engine) == "dp":
        return _dp_hamiltonian(g, witness)
    ok, w = _bt_hamiltonian(g)
    return ok, (w if witness else None)


def traceable(g: Graph, engine: Engine = "auto") -> bool:
    return is_traceable(g, engine, witness=False)[0]


def hamiltonian(g: Graph, engine: Engine = "auto") -> bool:
    return is_hamiltonian(g, engine, witness=False)[0]


def has_ham_cycle_through_edge(g: Graph, u: int, v: int, engine: Engine = "auto") -> bool:
    """Whether some Hamiltonian cycle of ``g`` uses the edge ``uv``.

    Equivalent to a Hamiltonian ``u``-``v`` path when ``n >= 3``.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if g.n < 3:
        return False
    if any(nb.bit_count() < 2 for nb in g.adj):
        return False
    if _pick_engine(g, engine) == "dp":
        return _dp_uv_path(g, u, v)
    return _dfs_path(g, u, 1 << v) is not None


# -- naive oracles -----------------------------------------------------


def _check_naive(g: Graph) -> None:
    if g.n > NAIVE_MAX_N:
        raise ValueError(f"naive oracle limited to n <= {NAIVE_MAX_N}, got {g.n}")


def _sequences(g: Graph, first: tuple[int, ...]):
    """Every vertex permutation starting with ``first`` whose consecutive
    vertices are adjacent (prefixes with a non-adjacent step are dropped)."""
    n = g.n
    seq = list(first)
    used = [False] * n
    for v in seq:
        used[v] = True

    def rec():
        if len(seq) == n:
            yield tuple(seq)
            return
        last = seq[-1]
        for w in range(n):
            if not used[w] and g.has_edge(last, w):
                used[w] = True
                seq.append(w)
                yield from rec()
                seq.pop()
                used[w] = False

    yield from rec()


def naive_traceable(g: Graph) -> bool:
    """Brute force over vertex orderings."""
    _check_naive(g)
    if g.n == 0:
        return False
    if g.n <= 7:
        return any(
            all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
            for p in permutations(range(g.n))
        )
    return any(True for s in range(g.n) for _ in _sequences(g, (s,)))


def naive_hamiltonian(g: Graph) -> bool:
    """Brute force over vertex orderings that start at vertex 0."""
    _check_naive(g)
    if g.n < 3:
        return False
    if g.n <= 7:
        return any(
            all(g.has_edge(a, b) for a, b in zip(p, p[1:])) and g.has_edge(p[-1], 0)
            for p in ((0,) + q for q in permutations(range(1, g.n)))
        )
    return any(g.has_edge(p[-1], 0) for p in _sequences(g, (0,)))
