"""Compact undirected simple graphs on at most ``MAXN`` vertices.

A :class:`Graph` stores one neighbour bitmask per vertex.  Vertex sets are
plain ``int`` bitmasks internally; the public helpers accept any iterable of
vertices and hand back ``frozenset`` objects where a set is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAXN = 32

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph, vertex or edge argument."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v`` as a bitmask.  Use
    :meth:`from_edges` to build one; the raw constructor validates symmetry.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAXN:
            raise GraphError(f"order {self.n} outside 0..{MAXN}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour >= n")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in bits(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAXN:
            raise GraphError(f"order {n} outside 0..{MAXN}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def size(self) -> int:
        """Number of edges."""
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        """Non-adjacent distinct pairs ``(u, v)``, ``u < v``, lexicographic."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(nb | (1 << v) == full for v, nb in enumerate(self.adj))

    def is_regular(self, d: int) -> bool:
        return all(nb.bit_count() == d for nb in self.adj)

    def is_clique(self, mask: int) -> bool:
        """True if the vertex set ``mask`` induces a complete subgraph."""
        return all(mask & ~(1 << v) & ~self.adj[v] == 0 for v in bits(mask))

    # -- value-semantics updates ---------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"cannot add loop at {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v, nb in enumerate(self.adj):
            pv = perm[v]
            for w in bits(nb):
                adj[pv] |= 1 << perm[w]
        return Graph(self.n, tuple(adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return g.non_edges()


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the subgraph and ``label`` where ``label[i]`` is the original
    vertex that became vertex ``i`` (vertices keep their relative order).
    """
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(keep), edges), keep


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


# -- connectivity ------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within``, as masks.

    Ordered by least vertex.
    """
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def blocks_and_cut_vertices(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Block decomposition of a connected graph.

    Blocks are maximal 2-connected subgraphs and bridges, each given by its
    vertex set and sorted by their sorted vertex tuples.  An isolated vertex
    (``n == 1``) is a single trivial block.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    if g.n == 1:
        return [frozenset({0})], frozenset()

    # Hopcroft-Tarjan with an explicit stack of edges.
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    found: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    stack = [(0, -1, iter(sorted(bits(g.adj[0]))))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(sorted(bits(g.adj[w])))))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != 0:
                cut.add(parent)
            block: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                block.update((a, b))
                if (a, b) == (parent, v):
                    break
            found.append(frozenset(block))
    if root_children > 1:
        cut.add(0)
    found.sort(key=lambda b: tuple(sorted(b)))
    return found, frozenset(cut)


# -- graph6 ------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """graph6 encoding (no header) of a graph with ``n <= 62``."""
    if g.n > 62:
        raise GraphError("graph6 short form supports n <= 62 only")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos + offset} outside '?'..'~'")
    if s[0] == "~":
        raise Graph6Error(f"position {offset}: orders above 62 are not supported (MAXN={MAXN})")
    n = ord(s[0]) - 63
    if n > MAXN:
        raise Graph6Error(f"position {offset}: order {n} exceeds MAXN={MAXN}")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise Graph6Error(
            f"position {offset + min(len(s), expected)}: expected {expected} characters for n={n}, got {len(s)}"
        )
    payload = s[1:]
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            group = ord(payload[k // 6]) - 63
            if group >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(payload) * 6 - nbits
    if pad and (ord(payload[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error(f"position {offset + len(s) - 1}: nonzero padding bits")
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str], source: str = "<input>") -> list[Graph]:
    """Parse a newline-separated graph6 stream, skipping blank lines."""
    graphs = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            graphs.append(from_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"{source}:{lineno}: {exc}") from None
    return graphs


# -- named graphs ------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def paw_graph() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 on vertex 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


_FIXED = {
    "petersen": petersen_graph,
    "paw": paw_graph,
    "k4_minus_edge": lambda: complete_graph(4).remove_edge(2, 3),
}

_SIZED = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": Graph.empty,
    "star": star_graph,
}


def named(name: str) -> Graph:
    """Look up a built-in graph.

    Fixed names: ``petersen``, ``paw``, ``k4_minus_edge``.  Sized families
    take a suffix: ``path_7``, ``cycle_5``, ``complete_4``, ``empty_3``,
    ``star_3`` (``star_k`` is K_{1,k}).
    """
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    family, _, size = key.rpartition("_")
    if family in _SIZED and size.isdigit():
        return _SIZED[family](int(size))
    raise GraphError(f"unknown graph name {name!r}")


def named_catalog() -> list[str]:
    return sorted(_FIXED) + [f"{f}_<k>" for f in sorted(_SIZED)]
