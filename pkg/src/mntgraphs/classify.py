"""Maximal nontraceable / maximal nonhamiltonian classification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, component_masks
from .hamilton import Witness, has_ham_cycle_through_edge, is_hamiltonian, is_traceable


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of a maximality check.

    ``failing_edge`` is the lexicographically first non-edge whose addition
    leaves the graph nontraceable (for ``target == "mnt"``) or
    nonhamiltonian (``"mnh"``).  ``failing_edges`` lists all of them when
    the check ran in exhaustive mode.  ``mnt``/``mnh`` is ``None`` when that
    property was not evaluated.
    """

    target: str
    traceable: bool
    hamiltonian: bool
    mnt: bool | None
    mnh: bool | None
    failing_edge: tuple[int, int] | None = None
    witness: Witness | None = None
    failing_edges: tuple[tuple[int, int], ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "traceable": self.traceable,
            "hamiltonian": self.hamiltonian,
            "mnt": self.mnt,
            "mnh": self.mnh,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
            "witness": {"kind": self.witness.kind, "order": list(self.witness.order)} if self.witness else None,
        }


def _first_failures(g: Graph, keeps_property, exhaustive: bool) -> list[tuple[int, int]]:
    failures = []
    for u, v in g.non_edges():
        if keeps_property(g.add_edge(u, v)):
            failures.append((u, v))
            if not exhaustive:
                break
    return failures


def mnt_failing_edges(g: Graph, exhaustive: bool = False) -> list[tuple[int, int]]:
    """Non-edges whose addition leaves ``g`` nontraceable (first one only
    unless ``exhaustive``).  Assumes ``g`` is nontraceable."""
    comps = component_masks(g)
    if len(comps) >= 3 and not exhaustive:
        # one new edge cannot join three components; any non-edge fails
        return g.non_edges()[:1]
    return _first_failures(g, lambda h: not is_traceable(h, witness=False)[0], exhaustive)


def mnh_failing_edges(g: Graph, exhaustive: bool = False) -> list[tuple[int, int]]:
    return _first_failures(g, lambda h: not is_hamiltonian(h, witness=False)[0], exhaustive)


def is_mnt(g: Graph, exhaustive: bool = False) -> ClassificationReport:
    """Maximal nontraceable check.

    Complete graphs and ``K1`` are traceable and therefore never MNT.
    """
    traceable, witness = is_traceable(g)
    hamiltonian = is_hamiltonian(g, witness=False)[0] if traceable else False
    if traceable:
        return ClassificationReport("mnt", True, hamiltonian, False, None, witness=witness)
    failures = mnt_failing_edges(g, exhaustive)
    return ClassificationReport(
        "mnt", False, False, not failures, None,
        failing_edge=failures[0] if failures else None,
        failing_edges=tuple(failures) if exhaustive else (),
    )


def is_mnh(g: Graph, exhaustive: bool = False) -> ClassificationReport:
    """Maximal nonhamiltonian check (``K1`` and ``K2`` are vacuously MNH)."""
    hamiltonian, witness = is_hamiltonian(g)
    if hamiltonian:
        return ClassificationReport("mnh", True, True, None, False, witness=witness)
    traceable, path = is_traceable(g)
    failures = mnh_failing_edges(g, exhaustive)
    return ClassificationReport(
        "mnh", traceable, False, None, not failures,
        failing_edge=failures[0] if failures else None,
        witness=path,
        failing_edges=tuple(failures) if exhaustive else (),
    )


def classify(g: Graph) -> ClassificationReport:
    """Both maximality properties at once; the failing edge refers to MNT."""
    t = is_mnt(g)
    h = is_mnh(g)
    return ClassificationReport(
        "both", t.traceable, h.hamiltonian, t.mnt, h.mnh,
        failing_edge=t.failing_edge, witness=h.witness if h.hamiltonian else t.witness,
    )


def mnt(g: Graph) -> bool:
    """Fast boolean MNT test (no certificates)."""
    if is_traceable(g, witness=False)[0]:
        return False
    return not mnt_failing_edges(g)


def mnh(g: Graph) -> bool:
    if is_hamiltonian(g, witness=False)[0]:
        return False
    return not mnh_failing_edges(g)


def common_neighbor_free(g: Graph, u: int, v: int) -> bool:
    return not g.adj[u] & g.adj[v]


def dkw_eligible(g: Graph) -> list[tuple[int, int]]:
    """Edges ``y1y2`` of a cubic MNH graph with no common neighbour such that
    ``g + e`` has a Hamiltonian cycle through ``y1y2`` for every non-edge ``e``.

    Empty for graphs that are not cubic or not MNH.  Neighbourhoods are open,
    so the first condition means ``y1`` and ``y2`` lie on no common triangle.
    """
    if g.n == 0 or not g.is_regular(3) or not mnh(g):
        return []
    augmented = [g.add_edge(a, b) for a, b in g.non_edges()]
    return [
        (y1, y2)
        for y1, y2 in g.edges()
        if common_neighbor_free(g, y1, y2)
        and all(has_ham_cycle_through_edge(h, y1, y2) for h in augmented)
    ]
