from dataclasses import replace

import pytest

from prymfiber.cover.builder import (
    CONNECTED,
    SPLIT,
    MonodromyData,
    admissibility_diagnostics,
    build_cover,
    check_monodromy,
    cover_genus,
    quotient_graph,
    verify_admissible,
)
from prymfiber.cover.monodromy import cover_census, enumerate_covers, enumerate_monodromies, monodromy_census
from prymfiber.errors import CapExceeded, Disconnected, NotEulerian, SplitInvalid
from prymfiber.fiber.prym import supported_models
from prymfiber.graph.core import DualGraph
from prymfiber.search.enumerate import SearchSpace, enumerate_graphs

from conftest import rose


def test_fully_blown_banana(banana2):
    blown = banana2.full_subset()
    cg = build_cover(banana2, blown, MonodromyData())
    assert [(v.id, v.genus) for v in cg.cover.vertices] == [("u", 2), ("v", 2)]
    assert cg.fixed_edges == {"e1", "e2"}
    assert cover_genus(cg) == 5
    assert verify_admissible(cg)


def test_split_twisted_banana(banana2):
    mono = MonodromyData({"u": SPLIT, "v": SPLIT}, {"e2": 1})
    cg = build_cover(banana2, banana2.empty_subset(), mono)
    assert cg.cover.gamma == 4
    assert cg.fixed_edges == frozenset()
    assert cg.edge_involution["e1~0"] == ("e1~1", False)
    assert cover_genus(cg) == 5
    assert admissibility_diagnostics(cg) == []


def test_untwisted_split_cover_is_disconnected(banana2):
    with pytest.raises(Disconnected):
        build_cover(banana2, banana2.empty_subset(), MonodromyData({"u": SPLIT, "v": SPLIT}))


def test_connected_unbranched_vertex(banana2):
    cg = build_cover(banana2, banana2.empty_subset(), MonodromyData({"u": CONNECTED, "v": SPLIT}))
    assert cg.vertex_involution["u"] == "u"
    assert cg.vertex_involution["v~0"] == "v~1"
    assert cover_genus(cg) == 5
    assert verify_admissible(cg)


def test_smooth_base():
    graph = DualGraph.build([("c", 2)], [])
    data = list(enumerate_monodromies(graph, graph.empty_subset()))
    assert data == [MonodromyData({"c": CONNECTED}, {})]
    cg = build_cover(graph, graph.empty_subset(), data[0])
    assert cg.cover.vertices[0].genus == 3


def test_rational_two_loops_has_three_covers():
    graph = rose(2)
    data = list(enumerate_monodromies(graph, graph.empty_subset()))
    assert len(data) == 3
    assert all(d.split_choice == {"v": SPLIT} for d in data)
    for mono in data:
        cg = build_cover(graph, graph.empty_subset(), mono)
        assert cover_genus(cg) == 3
        assert verify_admissible(cg)


def test_blown_loop_is_fixed():
    graph = rose(2)
    cg = build_cover(graph, graph.subset(["l1"]), MonodromyData())
    assert cg.fixed_edges == {"l1"}
    assert cg.cover.vertices[0].genus == 0
    assert cover_genus(cg) == 3
    assert verify_admissible(cg)


def test_banana_census(banana2):
    census = monodromy_census(banana2, banana2.empty_subset())
    assert census == {"monodromy_data": 5, "cover_types": 3, "eta_count": 32}


def test_enumerated_covers_match_their_monodromy(banana2):
    blown = banana2.empty_subset()
    pairs = list(enumerate_covers(banana2, blown))
    assert [mono for mono, _ in pairs] == list(enumerate_monodromies(banana2, blown))
    assert all(cg == build_cover(banana2, blown, mono) for mono, cg in pairs)
    assert cover_census(banana2, blown, [cg for _, cg in pairs]) == monodromy_census(banana2, blown)


def test_quotient_recovers_base(banana2):
    cg = build_cover(banana2, banana2.empty_subset(), MonodromyData({"u": SPLIT, "v": SPLIT}, {"e1": 1}))
    quotient = quotient_graph(cg)
    assert quotient.vertex_ids == banana2.vertex_ids
    assert [e.id for e in quotient.edges] == ["e1", "e2"]


def test_reversed_fixed_edge_is_inadmissible(banana2):
    cg = build_cover(banana2, banana2.full_subset(), MonodromyData())
    broken = replace(cg, edge_involution={**cg.edge_involution, "e1": ("e1", True)})
    problems = admissibility_diagnostics(broken)
    assert any("exchanges the branches" in p for p in problems)
    assert not verify_admissible(broken)


def test_wrong_genus_is_flagged(banana2):
    cg = build_cover(banana2, banana2.full_subset(), MonodromyData())
    vertices = tuple(replace(v, genus=3) if v.id == "u" else v for v in cg.cover.vertices)
    broken = replace(cg, cover=DualGraph(vertices, cg.cover.edges, validate=False))
    problems = admissibility_diagnostics(broken)
    assert any("2g-1" in p for p in problems)
    assert any("ramification" in p for p in problems)


@pytest.mark.parametrize(
    "blown,mono,match",
    [
        (["e1", "e2"], MonodromyData({"u": SPLIT}), "cannot split"),
        ([], MonodromyData({"u": SPLIT}), "needs a split/connected choice"),
        ([], MonodromyData({"u": SPLIT, "v": "both"}), "choice must be"),
        ([], MonodromyData({"u": SPLIT, "v": SPLIT}, {"e1": 2}), "0 or 1"),
        ([], MonodromyData({"u": SPLIT, "v": SPLIT}, {"zz": 1}), "unknown edge"),
        ([], MonodromyData({"u": SPLIT, "v": SPLIT, "w": SPLIT}), "unknown vertices"),
    ],
)
def test_invalid_monodromy(banana2, blown, mono, match):
    with pytest.raises(SplitInvalid, match=match):
        check_monodromy(banana2, banana2.subset(blown), mono)


def test_rational_vertex_cannot_be_connected_unbranched():
    graph = rose(2)
    with pytest.raises(SplitInvalid, match="rational"):
        build_cover(graph, graph.empty_subset(), MonodromyData({"v": CONNECTED}))


def test_not_eulerian(banana2):
    with pytest.raises(NotEulerian):
        build_cover(banana2, banana2.subset(["e1"]), MonodromyData())


def test_monodromy_cap(banana5):
    with pytest.raises(CapExceeded):
        list(enumerate_monodromies(banana5, banana5.empty_subset(), cap=4))


def _sweep(space: SearchSpace) -> int:
    built = 0
    for graph in enumerate_graphs(space):
        for sigma in supported_models(graph):
            for mono in enumerate_monodromies(graph, sigma, cap=10):
                cg = build_cover(graph, sigma, mono)
                assert cover_genus(cg) == 2 * graph.total_genus - 1
                assert admissibility_diagnostics(cg) == [], (graph, sigma, mono)
                built += 1
    return built


def test_cover_genus_law_small_space():
    assert _sweep(SearchSpace(max_vertices=2, max_edges=4, max_genus_per_vertex=1)) > 0


@pytest.mark.slow
def test_cover_genus_law_larger_space():
    assert _sweep(SearchSpace(max_vertices=3, max_edges=6, max_genus_per_vertex=1)) > 0
