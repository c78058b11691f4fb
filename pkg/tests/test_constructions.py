from math import comb

import pytest

from mntgraphs.classify import is_mnt, mnt
from mntgraphs.constructions import (
    ConstructionError,
    ConstructionSpec,
    disjoint_clique_specs,
    disjoint_cliques,
    dkw_construct,
    dkw_construct_unchecked,
    dkw_specs,
    emit,
    expected_order,
    expected_size,
    zelinka_specs,
    zelinka_type1,
    zelinka_type2,
)
from mntgraphs.graph import blocks_and_cut_vertices, complete_graph, from_graph6, named


def test_disjoint_cliques_examples():
    g = disjoint_cliques(1, 1)
    assert (g.n, g.size()) == (2, 0) and is_mnt(g).mnt
    assert disjoint_cliques(3, 4).size() == 9
    g = disjoint_cliques(1, 2)
    assert (g.n, g.size()) == (3, 1) and is_mnt(g).mnt
    with pytest.raises(ConstructionError):
        disjoint_cliques(0, 3)
    with pytest.raises(ConstructionError):
        disjoint_cliques(20, 13)


def test_zelinka_type1_examples():
    g = zelinka_type1(6, [1, 1])
    assert (g.n, g.size()) == (8, 17) and mnt(g)
    g = zelinka_type1(5, [2, 2])
    assert (g.n, g.size()) == (9, 16) and mnt(g)
    g = zelinka_type1(6, [1, 2])
    assert (g.n, g.size()) == (9, 19)
    assert g.degree(0) == 5 + 3


def test_zelinka_type2_examples():
    g = zelinka_type2(3, [2, 2, 1])
    assert (g.n, g.size()) == (8, 10) and mnt(g)
    g = zelinka_type2(3, [2, 2, 2])
    assert (g.n, g.size()) == (9, 12) and mnt(g)
    g = zelinka_type2(4, [1, 1, 1])
    assert (g.n, g.size()) == (7, 9) and mnt(g)


@pytest.mark.parametrize(
    "call",
    [
        lambda: zelinka_type1(2, [1, 1]),
        lambda: zelinka_type1(4, [1, 3]),
        lambda: zelinka_type1(4, [1]),
        lambda: zelinka_type2(4, [1, 1]),
        lambda: zelinka_type2(30, [2, 2, 2]),
        lambda: dkw_construct(named("petersen"), 0, 1, 3),
        lambda: dkw_construct(named("petersen"), 0, 2, 1),
        lambda: dkw_construct(complete_graph(4), 0, 1, 1),
        lambda: dkw_construct_unchecked(named("petersen"), 0, 2, 1),
    ],
)
def test_parameter_errors(call):
    with pytest.raises(ConstructionError):
        call()


def test_dkw_on_petersen():
    p = named("petersen")
    for (y1, y2), h2 in [((0, 1), 1), ((0, 5), 2), ((7, 9), 1)]:
        g = dkw_construct(p, y1, y2, h2)
        assert g.n == 10 + 1 + h2
        assert g.size() == 15 + 2 * h2
        assert g.adj[10] == 1 << y1
        assert all(g.has_edge(y2, v) for v in range(11, g.n))
        assert is_mnt(g).mnt


def test_all_small_specs_match_formulas_and_are_mnt():
    specs = zelinka_specs(13) + [s for n in range(2, 14) for s in disjoint_clique_specs(n)]
    assert len(zelinka_specs(13)) == 50
    for spec in specs:
        g = spec.build()
        assert g.n == expected_order(spec) <= 13
        assert g.size() == expected_size(spec)
        assert mnt(g), spec.describe()


def test_zelinka_formulas_explicit():
    for spec in zelinka_specs(13):
        s = sum(spec.appendage_sizes)
        offset = 2 if spec.family == "zelinka1" else 3
        assert spec.build().size() == comb(spec.clique_order, 2) + 2 * s - offset


def test_zelinka2_has_four_complete_blocks():
    for spec in zelinka_specs(13, "zelinka2"):
        g = spec.build()
        blocks, cuts = blocks_and_cut_vertices(g)
        assert cuts == {0, 1, 2}
        assert len(blocks) == 4
        assert all(g.is_clique(sum(1 << v for v in b)) for b in blocks)


def test_dkw_specs_and_emit():
    specs = dkw_specs("petersen")
    assert len(specs) == 30
    line = emit(specs[0])
    g = from_graph6(line)
    assert (g.n, g.size()) == (12, 17)
    d = specs[1].as_dict()
    assert d["family"] == "dkw" and d["h2_size"] == 2


def test_spec_roundtrip_via_graph6_base():
    p = named("petersen")
    from mntgraphs.graph import to_graph6

    spec = ConstructionSpec("dkw", base_graph6=to_graph6(p), edge=(0, 1), h2_size=2)
    assert spec.build() == dkw_construct(p, 0, 1, 2)
    assert expected_size(spec) == 19 and expected_order(spec) == 13
