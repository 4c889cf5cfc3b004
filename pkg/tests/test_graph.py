from collections import Counter
from pathlib import Path

import pytest

from crystal_kit.core import CrystalParams, Element, Kind, s_scaled
from crystal_kit.fixtures import golden_fixture
from crystal_kit.g2 import G2Crystal
from crystal_kit.graph import (
    DecompositionError,
    CrystalGraph,
    TensorProduct,
    box_edges,
    build_graph,
    decompose,
    degree_profile,
    enumerate_elements,
    export_dot,
    export_json,
    is_connected,
    j_highest,
    parse_json,
    tensor,
)
from crystal_kit.hat_d4 import HatD4Crystal

from oracles import (
    A2,
    G2_LONG_FIRST,
    G2_SHORT_FIRST,
    a2_highest,
    a2_highest_element,
    brute_V,
    hat_a2_highest_weights,
    lemma_count,
    weyl_dimension,
)

GOLDEN = Path(__file__).parent / "golden"
BOX = golden_fixture(2).by_label()


def test_enumerate_counts():
    assert len(enumerate_elements(CrystalParams(Kind.G2, 0))) == 1
    assert len(enumerate_elements(CrystalParams(Kind.G2, 1))) == 15
    assert len(enumerate_elements(CrystalParams(Kind.G2, 2))) == 92
    assert len(enumerate_elements(CrystalParams(Kind.HAT_D4, 1))) == 8


@pytest.mark.parametrize("l", [0, 1, 2])
def test_enumerate_matches_brute_force(l):
    elements = enumerate_elements(CrystalParams(Kind.G2, l))
    assert elements == sorted(elements)
    assert {b.astuple() for b in elements} == brute_V(l)


@pytest.mark.parametrize("l", range(5))
def test_counts_by_s(l):
    counts = Counter(s_scaled(b) // 3 for b in G2Crystal(l).elements())
    assert counts == {k: lemma_count(k) for k in range(l + 1)}


def test_b_infinity_is_not_enumerable():
    with pytest.raises(ValueError):
        enumerate_elements(CrystalParams(Kind.B_INFINITY))


def test_build_graph_examples(g2_graphs, hat_graphs):
    g = g2_graphs[1]
    assert len(g) == 15
    edges = set(box_edges(g, golden_fixture(1).labels()))
    assert {("phi", "1", 0), ("1", "2", 1), ("2", "3", 2), ("12", "phi", 0)} <= edges
    assert set(g2_graphs[2].nodes) == golden_fixture(2).elements()
    h = hat_graphs[1]
    assert len(h) == 8 and is_connected(h)


def _frozen(path):
    rows = []
    for line in path.read_text().splitlines():
        if line and not line.startswith("#"):
            u, v, i = line.split("\t")
            rows.append((u, v, int(i)))
    return rows


@pytest.mark.parametrize("l", [1, 2])
def test_edges_match_frozen_golden(g2_graphs, l):
    got = box_edges(g2_graphs[l], golden_fixture(l).labels())
    assert sorted(got) == sorted(_frozen(GOLDEN / f"b{l}_edges.txt"))


@pytest.mark.parametrize("l", [1, 2, 3])
def test_degrees_follow_statistics(g2_graphs, l):
    g, c = g2_graphs[l], G2Crystal(l)
    deg = degree_profile(g)
    for k, b in enumerate(g.nodes):
        for i in range(3):
            assert deg["out"][k, i] == (1 if c.phi(i, b) > 0 else 0)
            assert deg["in"][k, i] == (1 if c.eps(i, b) > 0 else 0)
    assert len(set(g.edges)) == len(g.edges)


def test_j_highest_examples(g2_graphs):
    g = g2_graphs[1]
    assert j_highest(g, {1, 2}) == [Element(0, 0, 0, 0, 0, 0), Element(3, 0, 0, 0, 0, 0)]
    assert set(j_highest(g, {0, 1})) == {BOX["6"], BOX["8"], BOX["10"], BOX["11"]}
    assert j_highest(g, set()) == list(g.nodes)


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_g2_decomposition(g2_graphs, l):
    report = decompose(g2_graphs[l], {1, 2})
    assert [c.highest for c in report.components] == [Element(3 * k, 0, 0, 0, 0, 0) for k in range(l + 1)]
    assert report.sizes == [weyl_dimension(G2_LONG_FIRST, (k, 0)) for k in range(l + 1)]
    assert [c.weight[1:] for c in report.components] == [(k, 0) for k in range(l + 1)]


@pytest.mark.parametrize("l", [1, 2, 3])
def test_a2_decomposition(g2_graphs, l):
    report = decompose(g2_graphs[l], {0, 1})
    want = {a2_highest_element(l, *t): weyl_dimension(A2, t[1:]) for t in a2_highest(l)}
    got = {c.highest.astuple(): c.size for c in report.components}
    assert got == want
    assert len(report.components) == sum((l - 2 * i + 1) ** 2 for i in range(l // 2 + 1))
    for c in report.components:
        assert c.weight[0] >= 0 and c.weight[1] >= 0


def test_a2_sizes_level_two(g2_graphs):
    assert sorted(decompose(g2_graphs[2], {0, 1}).sizes) == [1, 3, 3, 6, 6, 8, 8, 15, 15, 27]


@pytest.mark.parametrize("l", [1, 2, 3])
def test_hat_decompositions(hat_graphs, l):
    a2 = decompose(hat_graphs[l], {0, 1})
    assert sorted(c.weight[:2] for c in a2.components) == hat_a2_highest_weights(l)
    assert sorted(a2.sizes) == sorted(weyl_dimension(A2, w) for w in hat_a2_highest_weights(l))
    g2 = decompose(hat_graphs[l], {1, 2})
    assert g2.sizes == [weyl_dimension(G2_SHORT_FIRST, (j, 0)) for j in range(l + 1)]


def test_hat_level_one_single_a2_component(hat_graphs):
    report = decompose(hat_graphs[1], {0, 1})
    assert report.sizes == [8]
    assert report.components[0].weight[:2] == (1, 1)


def test_decompose_detects_bad_components(g2_graphs):
    g = g2_graphs[1]
    top, other = g.index_of(BOX["1"]), g.index_of(BOX["7"])
    looped = CrystalGraph(g.crystal, g.nodes, g.edges + ((other, top, 1),))
    with pytest.raises(DecompositionError):
        decompose(looped, {1, 2})


def test_tensor_examples(g2_graphs):
    single = tensor(g2_graphs[0], g2_graphs[0])
    assert len(single) == 1
    b11 = tensor(g2_graphs[1], g2_graphs[1])
    assert len(b11) == 225 and is_connected(b11)
    zero = Element(0, 0, 0, 0, 0, 0)
    assert b11.crystal.phi(2, (zero, zero)) == 0


def test_tensor_rule_direction():
    t = TensorProduct((G2Crystal(1), G2Crystal(1)))
    zero, one = BOX["phi"], BOX["1"]
    # phi_0(phi*) = 1 > eps_0(phi*) = 1 fails, so f_0 acts on the right factor
    assert t.f(0, (zero, zero)) == (zero, one)


def test_tensor_rejects_mixed_algebras():
    with pytest.raises(ValueError):
        TensorProduct((G2Crystal(1), HatD4Crystal(1)))


def test_dot_export(g2_graphs):
    one = export_dot(g2_graphs[0])
    assert one.count("[label=") == 1 and "->" not in one
    dot = export_dot(g2_graphs[1])
    assert dot.count(" -> ") == len(g2_graphs[1].edges) == 20
    assert sum(1 for line in dot.splitlines() if line.strip().startswith("n") and "->" not in line) == 15
    assert 'label="(0,1/3,4/3,0,0,0)"' in dot
    assert "color=red" in dot and "color=blue" in dot and "color=green" in dot


@pytest.mark.parametrize("l", [0, 1, 2])
def test_json_round_trip(g2_graphs, hat_graphs, l):
    for g in (g2_graphs[l], hat_graphs[l]):
        assert parse_json(export_json(g)) == g
        assert export_json(parse_json(export_json(g))) == export_json(g)


def test_tensor_json_round_trip(g2_graphs):
    t = tensor(g2_graphs[1], g2_graphs[0])
    assert parse_json(export_json(t)) == t


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_parallel_build_is_identical(workers):
    base = build_graph(G2Crystal(2), workers=1)
    assert build_graph(G2Crystal(2), workers=workers) == base
    assert export_dot(build_graph(G2Crystal(2), workers=workers)) == export_dot(base)


def test_threads_env(monkeypatch):
    monkeypatch.setenv("CRYSTAL_KIT_THREADS", "4")
    assert export_json(build_graph(G2Crystal(2))) == export_json(build_graph(G2Crystal(2), workers=1))
