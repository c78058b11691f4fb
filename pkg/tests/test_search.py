import json

import pytest

from mntgraphs.canon import brute_canonical_key, canonical_key, is_isomorphic
from mntgraphs.classify import mnh, mnt
from mntgraphs.constructions import disjoint_cliques
from mntgraphs.graph import Graph, complete_graph, from_graph6, named, path_graph
from mntgraphs.search import (
    brute_force_classes,
    enumerate_classes,
    load_checkpoint,
    min_mnh_size,
    min_mnt_size,
    save_checkpoint,
    witness_filename,
    SearchStats,
)

CONNECTED = [1, 1, 2, 6, 21, 112, 853]
TOTAL = [1, 2, 4, 11, 34, 156, 1044]


def test_enumerate_examples():
    got = list(enumerate_classes(4, 3))
    assert len(got) == 3
    wanted = [path_graph(4), named("star_3"), Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])]
    assert all(any(is_isomorphic(g, w) for g in got) for w in wanted)
    assert [canonical_key(g) for g in enumerate_classes(3, 3, True)] == [canonical_key(complete_graph(3))]
    assert len(list(enumerate_classes(5, 10, True))) == 1
    with pytest.raises(ValueError):
        list(enumerate_classes(11, 3))
    with pytest.raises(ValueError):
        list(enumerate_classes(4, 7))


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    for conn in (False, True):
        oracle = brute_force_classes(n, None, conn)
        for m in range(n * (n - 1) // 2 + 1):
            mine = [brute_canonical_key(g) for g in enumerate_classes(n, m, conn)]
            assert sorted(mine) == [k for k in oracle if from_graph6(k).size() == m]


@pytest.mark.parametrize("n", range(1, 8))
def test_published_class_counts(n):
    top = n * (n - 1) // 2
    assert sum(len(list(enumerate_classes(n, m))) for m in range(top + 1)) == TOTAL[n - 1]
    assert sum(len(list(enumerate_classes(n, m, True))) for m in range(top + 1)) == CONNECTED[n - 1]


@pytest.mark.parametrize("n, expected", [(2, 0), (3, 1), (4, 2), (5, 4), (6, 6), (7, 8)])
def test_min_mnt_small(n, expected):
    out = min_mnt_size(n)
    assert out.exact and out.result == expected
    keys = {canonical_key(w) for w in out.witnesses}
    assert len(keys) == len(out.witnesses)
    for w in out.witnesses:
        assert w.size() == expected and mnt(w)


def test_n2_witness_is_two_isolated_vertices():
    out = min_mnt_size(2)
    assert out.witnesses == [Graph.empty(2)]


def test_disconnected_mnt_graphs_are_two_cliques():
    for n in range(2, 7):
        for m in range(n * (n - 1) // 2 + 1):
            for g in enumerate_classes(n, m):
                if not _connected(g) and mnt(g):
                    assert any(is_isomorphic(g, disjoint_cliques(k, n - k)) for k in range(1, n))


def _connected(g):
    from mntgraphs.graph import is_connected

    return is_connected(g)


@pytest.mark.parametrize("n, expected", [(4, 4), (5, 6), (6, 9)])
def test_min_mnh_small(n, expected):
    out = min_mnh_size(n)
    assert out.result == expected
    assert all(mnh(w) and w.size() == expected for w in out.witnesses)
    if n == 4:
        assert any(is_isomorphic(w, named("paw")) for w in out.witnesses)


def test_budget_gives_bracket():
    out = min_mnt_size(8, max_classes=50)
    assert not out.exact and out.result is None
    lo, hi = out.bracket
    assert lo <= 10 <= hi


def test_checkpoint_resume_matches_fresh_run(tmp_path):
    ck = tmp_path / "ck.json"
    partial = min_mnt_size(7, max_classes=60, checkpoint=ck)
    assert not partial.exact
    data = load_checkpoint(ck)
    assert data["n"] == 7 and data["target"] == "mnt"
    resumed = min_mnt_size(7, resume=ck)
    fresh = min_mnt_size(7)
    assert resumed.result == fresh.result == 8
    assert [canonical_key(w) for w in resumed.witnesses] == [canonical_key(w) for w in fresh.witnesses]
    assert resumed.stats.classes == fresh.stats.classes
    assert resumed.stats.decider_calls == fresh.stats.decider_calls


def test_checkpoint_errors(tmp_path):
    ck = tmp_path / "ck.json"
    save_checkpoint(ck, 6, "mnt", 5, ["E?~w"], SearchStats())
    with pytest.raises(ValueError):
        min_mnt_size(7, resume=ck)
    data = json.loads(ck.read_text())
    data["version"] = 99
    ck.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        load_checkpoint(ck)


def test_parallel_search_is_deterministic():
    one = min_mnt_size(7, jobs=1)
    two = min_mnt_size(7, jobs=2)
    assert one.as_dict()["witnesses"] == two.as_dict()["witnesses"]
    assert one.stats.classes == two.stats.classes


def test_outcome_serialization():
    out = min_mnt_size(5)
    d = out.as_dict()
    assert d["result"] == 4 and all(from_graph6(w).size() == 4 for w in d["witnesses"])
    assert witness_filename(out) == "mnt-n5-m4.g6"


def test_range_checks():
    with pytest.raises(ValueError):
        min_mnt_size(1)
    with pytest.raises(ValueError):
        min_mnh_size(3)
