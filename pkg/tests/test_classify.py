from hypothesis import given, settings

from conftest import graphs
from mntgraphs.graph import complete_graph, cycle_graph, disjoint_union, named, path_graph, Graph
from mntgraphs.classify import (
    classify,
    common_neighbor_free,
    dkw_eligible,
    is_mnh,
    is_mnt,
    mnh,
    mnt,
)
from mntgraphs.hamilton import hamiltonian, naive_hamiltonian, naive_traceable, traceable


def _brute_mnt(g):
    return not naive_traceable(g) and all(naive_traceable(g.add_edge(u, v)) for u, v in g.non_edges())


def _brute_mnh(g):
    return not naive_hamiltonian(g) and all(naive_hamiltonian(g.add_edge(u, v)) for u, v in g.non_edges())


def test_mnt_examples():
    assert is_mnt(disjoint_union(complete_graph(3), complete_graph(4))).mnt
    r = is_mnt(path_graph(5))
    assert r.traceable and r.mnt is False and r.witness is not None
    star = named("star_3")
    assert not traceable(star)
    assert all(traceable(star.add_edge(u, v)) for u, v in star.non_edges())
    assert is_mnt(star).mnt


def test_complete_and_trivial_graphs_are_not_mnt():
    for n in range(1, 6):
        assert not is_mnt(complete_graph(n)).mnt


def test_mnh_examples():
    assert is_mnh(named("petersen")).mnh
    paw = named("paw")
    assert len(paw.non_edges()) == 2 and is_mnh(paw).mnh and _brute_mnh(paw)
    assert is_mnh(cycle_graph(5)).mnh is False


def test_failing_edge_certificate():
    g = disjoint_union(Graph.empty(3), complete_graph(2))  # four components
    r = is_mnt(g)
    assert r.mnt is False and r.failing_edge == g.non_edges()[0]
    assert not traceable(g.add_edge(*r.failing_edge))


def test_exhaustive_failure_list():
    g = Graph.empty(4)
    r = is_mnt(g, exhaustive=True)
    assert set(r.failing_edges) == set(g.non_edges())
    assert r.failing_edge == (0, 1)


def test_report_invariants_and_oracle(classes7):
    for g in classes7:
        t = is_mnt(g)
        h = is_mnh(g)
        assert t.mnt == _brute_mnt(g) == mnt(g)
        assert h.mnh == _brute_mnh(g) == mnh(g)
        if t.mnt:
            assert not t.traceable and t.failing_edge is None
        if not t.mnt and not t.traceable and g.non_edges():
            assert t.failing_edge is not None
            assert not traceable(g.add_edge(*t.failing_edge))
        if h.mnh is False and not h.hamiltonian:
            assert not hamiltonian(g.add_edge(*h.failing_edge))
        if h.mnh:
            assert not h.hamiltonian


def test_classify_combines_both():
    r = classify(named("petersen"))
    assert r.traceable and not r.hamiltonian and r.mnt is False and r.mnh
    d = r.as_dict()
    assert d["mnh"] is True and d["witness"]["kind"] == "path"


def test_dkw_eligible_petersen():
    p = named("petersen")
    eligible = dkw_eligible(p)
    assert sorted(eligible) == sorted(p.edges())
    assert all(not set(p.neighbors(a)) & set(p.neighbors(b)) for a, b in eligible)


def test_dkw_eligible_rejects():
    assert dkw_eligible(complete_graph(4)) == []
    assert dkw_eligible(cycle_graph(6)) == []  # not cubic
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert dkw_eligible(prism) == []  # hamiltonian
    assert not common_neighbor_free(prism, 0, 1)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_failing_edge_rechecks(g):
    r = is_mnt(g)
    if r.failing_edge is not None:
        assert not traceable(g.add_edge(*r.failing_edge))
        assert r.failing_edge == min(e for e in g.non_edges() if not traceable(g.add_edge(*e)))
