import pytest
from hypothesis import given, settings

from conftest import graphs
from mntgraphs.graph import Graph, GraphError, complete_graph, cycle_graph, disjoint_union, named, path_graph
from mntgraphs.hamilton import (
    Witness,
    has_ham_cycle_through_edge,
    is_hamiltonian,
    is_traceable,
    naive_hamiltonian,
    naive_traceable,
    validate_witness,
)

ENGINES = ("dp", "backtrack")


@pytest.mark.parametrize("engine", ENGINES)
def test_traceable_examples(engine):
    ok, w = is_traceable(path_graph(7), engine)
    assert ok and validate_witness(path_graph(7), w) and w.kind == "path"
    assert is_traceable(disjoint_union(complete_graph(3), complete_graph(2)), engine) == (False, None)
    ok, w = is_traceable(named("petersen"), engine)
    assert ok and validate_witness(named("petersen"), w)


def test_petersen_traceable_by_naive_oracle():
    assert naive_traceable(named("petersen"))
    assert not naive_hamiltonian(named("petersen"))


@pytest.mark.parametrize("engine", ENGINES)
def test_hamiltonian_examples(engine):
    ok, w = is_hamiltonian(cycle_graph(6), engine)
    assert ok and w.kind == "cycle" and validate_witness(cycle_graph(6), w)
    assert not is_hamiltonian(named("petersen"), engine)[0]
    for n in range(3, 9):
        assert not is_hamiltonian(path_graph(n), engine)[0]
        assert not is_hamiltonian(named(f"star_{n - 1}"), engine)[0]


def test_trivial_orders():
    assert naive_traceable(Graph.empty(1)) and is_traceable(Graph.empty(1))[0]
    assert not naive_hamiltonian(complete_graph(2)) and not is_hamiltonian(complete_graph(2))[0]
    assert is_traceable(complete_graph(2))[0]


def test_forced_edge_examples():
    c5 = cycle_graph(5)
    assert all(has_ham_cycle_through_edge(c5, u, v) for u, v in c5.edges())
    k4e = named("k4_minus_edge")
    deg2 = [v for v in range(4) if k4e.degree(v) == 2]
    assert all(has_ham_cycle_through_edge(k4e, v, w) for v in deg2 for w in k4e.neighbors(v))
    with pytest.raises(GraphError):
        has_ham_cycle_through_edge(c5, 0, 2)


def test_forced_edge_on_augmented_petersen():
    p = named("petersen")
    for a, b in p.non_edges():
        h = p.add_edge(a, b)
        for y1, y2 in p.edges():
            if p.adj[y1] & p.adj[y2]:
                continue
            assert has_ham_cycle_through_edge(h, y1, y2)


def test_witness_validator_rejects_bad_sequences():
    g = path_graph(4)
    assert validate_witness(g, Witness("path", (0, 1, 2, 3)))
    assert not validate_witness(g, Witness("path", (0, 2, 1, 3)))
    assert not validate_witness(g, Witness("path", (0, 1, 2)))
    assert not validate_witness(g, Witness("cycle", (0, 1, 2, 3)))
    assert validate_witness(cycle_graph(4), Witness("cycle", (0, 1, 2, 3)))


def test_naive_guard():
    with pytest.raises(ValueError):
        naive_traceable(Graph.empty(13))


def test_fast_equals_naive_on_all_classes(classes7):
    for g in classes7:
        t, h = naive_traceable(g), naive_hamiltonian(g)
        for engine in ENGINES:
            assert is_traceable(g, engine, witness=False)[0] == t
            assert is_hamiltonian(g, engine, witness=False)[0] == h


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_engines_agree_including_witness(g):
    assert is_traceable(g, "dp") == is_traceable(g, "backtrack")
    assert is_hamiltonian(g, "dp") == is_hamiltonian(g, "backtrack")


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_decider_properties(g):
    t, tw = is_traceable(g)
    h, hw = is_hamiltonian(g)
    if t:
        assert validate_witness(g, tw)
        for u, v in g.non_edges():
            assert is_traceable(g.add_edge(u, v), witness=False)[0]
    if h:
        assert t and validate_witness(g, hw)
    for u, v in g.edges():
        if has_ham_cycle_through_edge(g, u, v):
            assert h
    if h:
        # a Hamiltonian cycle uses n edges, so at least one edge carries one
        assert any(has_ham_cycle_through_edge(g, u, v) for u, v in g.edges())


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=13, max_n=15))
def test_engines_agree_beyond_dp_range(g):
    assert is_traceable(g, "dp", witness=False)[0] == is_traceable(g, "backtrack", witness=False)[0]
    assert is_hamiltonian(g, "dp", witness=False)[0] == is_hamiltonian(g, "backtrack", witness=False)[0]
