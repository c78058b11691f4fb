"""Isomorph-free exhaustive search for the minimum size of MNT and MNH graphs.

Connected isomorphism classes are produced level by level in the number of
edges.  Trees on ``n`` vertices come from trees on ``n - 1`` vertices by
attaching a leaf; every connected graph with ``m + 1`` edges comes from one
with ``m`` edges by adding a non-edge (delete any edge on a cycle).  Each
child is put in canonical form and the level is deduplicated on the
canonical graph6 key, so the stream holds exactly one graph per class, in
key order.

Disconnected MNT graphs are two disjoint cliques and are handled in closed
form.  A disconnected graph on three or more vertices is never MNH: a graph
that becomes hamiltonian after adding one edge was already connected.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterator

from .canon import canonical_form, canonical_key
from .constructions import disjoint_cliques
from .graph import Graph, from_graph6, to_graph6
from .hamilton import hamiltonian, traceable

EXACT_MAX_N = 10
CHECKPOINT_VERSION = 1


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchStats:
    classes: int = 0
    decider_calls: int = 0
    seconds: float = 0.0
    per_level: dict[int, int] = field(default_factory=dict)


@dataclass
class SearchOutcome:
    """``result`` is the exact minimum; when the budget ran out it is
    ``None`` and ``bracket`` holds (proved lower bound, known upper bound)."""

    n: int
    target: str
    result: int | None
    witnesses: list[Graph]
    stats: SearchStats
    bracket: tuple[int, int | None] | None = None

    @property
    def exact(self) -> bool:
        return self.result is not None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "result": self.result,
            "bracket": list(self.bracket) if self.bracket else None,
            "witnesses": [to_graph6(g) for g in self.witnesses],
            "stats": asdict(self.stats),
        }


# -- class generation ---------------------------------------------------


def _canonical_children(args: tuple[str, bool]) -> list[str]:
    """Canonical keys of all one-edge (or one-leaf) extensions of a class."""
    g6, grow_vertex = args
    g = from_graph6(g6)
    if grow_vertex:
        n = g.n
        keys = set()
        for v in range(n):
            child = Graph.from_edges(n + 1, g.edges() + [(v, n)])
            keys.add(canonical_key(child))
        return sorted(keys)
    return sorted({canonical_key(g.add_edge(u, v)) for u, v in g.non_edges()})


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2 * jobs:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def _expand(level: list[str], grow_vertex: bool, jobs: int) -> list[str]:
    merged: set[str] = set()
    for keys in _map(_canonical_children, [(k, grow_vertex) for k in level], jobs):
        merged.update(keys)
    return sorted(merged)


def tree_classes(n: int, jobs: int = 1) -> list[str]:
    """Canonical keys of the trees on ``n`` vertices."""
    level = [canonical_key(Graph.empty(1))]
    for _ in range(1, n):
        level = _expand(level, True, jobs)
    return level


def connected_levels(n: int, jobs: int = 1, start: tuple[int, list[str]] | None = None
                     ) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(m, keys)`` for connected classes with ``m = n - 1, n, ...``.

    ``start`` resumes from a known level ``(m, keys)`` (that level itself is
    not yielded again).
    """
    if start is None:
        m, level = n - 1, tree_classes(n, jobs)
        yield m, level
    else:
        m, level = start
    while m < comb(n, 2):
        level = _expand(level, False, jobs)
        m += 1
        yield m, level


def all_levels(n: int, jobs: int = 1) -> Iterator[tuple[int, list[str]]]:
    level = [canonical_key(Graph.empty(n))]
    m = 0
    yield m, level
    while m < comb(n, 2):
        level = _expand(level, False, jobs)
        m += 1
        yield m, level


def enumerate_classes(n: int, m: int, connected_only: bool = False, jobs: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of graphs with
    ``n`` vertices and ``m`` edges (connected ones only if requested)."""
    if n < 1 or n > EXACT_MAX_N:
        raise ValueError(f"class enumeration supports 1 <= n <= {EXACT_MAX_N}")
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"m must lie in 0..{comb(n, 2)}")
    if connected_only:
        if n == 1:
            keys = [to_graph6(Graph.empty(1))] if m == 0 else []
        elif m < n - 1:
            keys = []
        else:
            keys = next(k for mm, k in connected_levels(n, jobs) if mm == m)
    else:
        keys = next(k for mm, k in all_levels(n, jobs) if mm == m)
    for k in keys:
        yield from_graph6(k)


def brute_force_classes(n: int, m: int | None = None, connected_only: bool = False) -> list[str]:
    """Oracle: canonical keys over every labelled graph (small ``n`` only).

    Labelled graphs are visited as bit masks over vertex pairs; each new mask
    has its whole orbit under vertex permutations marked, so every class is
    keyed once by the all-permutations canonical form.
    """
    from itertools import permutations

    from .canon import brute_canonical_key
    from .graph import is_connected

    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    moves = [
        [index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        for perm in permutations(range(n))
    ]
    seen: set[int] = set()
    keys = set()
    for edges in range(1 << len(pairs)):
        if edges in seen or (m is not None and edges.bit_count() != m):
            continue
        present = [i for i in range(len(pairs)) if edges >> i & 1]
        for move in moves:
            seen.add(sum(1 << move[i] for i in present))
        g = Graph.from_edges(n, [pairs[i] for i in present])
        if connected_only and not is_connected(g):
            continue
        keys.add(brute_canonical_key(g))
    return sorted(keys)


# -- classification ----------------------------------------------------


def _maximal_with_calls(args: tuple[str, str]) -> tuple[bool, int]:
    g6, target = args
    g = from_graph6(g6)
    decide: Callable[[Graph], bool] = traceable if target == "mnt" else hamiltonian
    calls = 1
    if decide(g):
        return False, calls
    for u, v in g.non_edges():
        calls += 1
        if not decide(g.add_edge(u, v)):
            return False, calls
    return True, calls


def _two_clique_sizes(n: int) -> dict[int, list[int]]:
    sizes: dict[int, list[int]] = {}
    for k in range(1, n // 2 + 1):
        sizes.setdefault(comb(k, 2) + comb(n - k, 2), []).append(k)
    return sizes


# -- checkpoints --------------------------------------------------------


def save_checkpoint(path: str | os.PathLike, n: int, target: str, m: int, level: list[str],
                    stats: SearchStats) -> None:
    data = {
        "version": CHECKPOINT_VERSION,
        "n": n,
        "target": target,
        "level_m": m,
        "level": level,
        "stats": asdict(stats),
    }
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(json.dumps(data))
    tmp.replace(path)


def load_checkpoint(path: str | os.PathLike) -> dict:
    data = json.loads(Path(path).read_text())
    if data.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"{path}: unsupported checkpoint version {data.get('version')!r}")
    data["stats"]["per_level"] = {int(k): v for k, v in data["stats"]["per_level"].items()}
    return data


# -- minimum size search ----------------------------------------------


def _min_size(n: int, target: str, max_classes: int | None, jobs: int,
              checkpoint: str | os.PathLike | None, resume: str | os.PathLike | None) -> SearchOutcome:
    t0 = time.perf_counter()
    stats = SearchStats()
    start = None
    if resume is not None:
        data = load_checkpoint(resume)
        if data["n"] != n or data["target"] != target:
            raise ValueError(f"{resume}: checkpoint is for n={data['n']} {data['target']}")
        stats = SearchStats(**data["stats"])
        start = (data["level_m"], data["level"])
    elapsed0 = stats.seconds

    two_cliques = _two_clique_sizes(n) if target == "mnt" else {}
    upper = min(two_cliques) if two_cliques else None

    def finish(result, witnesses, bracket=None):
        stats.seconds = elapsed0 + time.perf_counter() - t0
        return SearchOutcome(n, target, result, witnesses, stats, bracket)

    first_connected = n - 1 if start is None else start[0] + 1
    for m in range(0 if start is None else first_connected, first_connected):
        if m in two_cliques:
            graphs = [canonical_form(disjoint_cliques(k, n - k)) for k in two_cliques[m]]
            return finish(m, sorted(graphs, key=to_graph6))

    for m, level in connected_levels(n, jobs, start):
        if max_classes is not None and stats.classes + len(level) > max_classes:
            return finish(None, [], (m, upper))
        results = _map(_maximal_with_calls, [(k, target) for k in level], jobs)
        stats.classes += len(level)
        stats.per_level[m] = len(level)
        stats.decider_calls += sum(c for _, c in results)
        witnesses = [from_graph6(k) for k, (ok, _) in zip(level, results) if ok]
        for k in two_cliques.get(m, []):
            witnesses.append(canonical_form(disjoint_cliques(k, n - k)))
        if witnesses:
            return finish(m, sorted(witnesses, key=to_graph6))
        if checkpoint is not None:
            stats.seconds = elapsed0 + time.perf_counter() - t0
            save_checkpoint(checkpoint, n, target, m, level, stats)
    return finish(None, [], (comb(n, 2) + 1, upper))


def min_mnt_size(n: int, max_classes: int | None = None, jobs: int = 1,
                 checkpoint: str | os.PathLike | None = None,
                 resume: str | os.PathLike | None = None) -> SearchOutcome:
    """Least size of a maximal nontraceable graph of order ``n`` with every
    minimum witness (one per isomorphism class)."""
    if not 2 <= n <= EXACT_MAX_N:
        raise ValueError(f"exact MNT search supports 2 <= n <= {EXACT_MAX_N}")
    return _min_size(n, "mnt", max_classes, jobs, checkpoint, resume)


def min_mnh_size(n: int, max_classes: int | None = None, jobs: int = 1,
                 checkpoint: str | os.PathLike | None = None,
                 resume: str | os.PathLike | None = None) -> SearchOutcome:
    """Least size of a maximal nonhamiltonian graph of order ``n``."""
    if not 4 <= n <= 9:
        raise ValueError("exact MNH search supports 4 <= n <= 9")
    return _min_size(n, "mnh", max_classes, jobs, checkpoint, resume)


def witness_filename(outcome: SearchOutcome) -> str:
    return f"{outcome.target}-n{outcome.n}-m{outcome.result}.g6"
