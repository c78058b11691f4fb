"""Maximal nontraceable and maximal nonhamiltonian graphs: deciders,
constructions, executable structure laws, size bounds and exhaustive search."""

from .graph import MAXN, Graph, from_graph6, named, to_graph6

__all__ = ["MAXN", "Graph", "from_graph6", "named", "to_graph6"]
__version__ = "0.1.0"
