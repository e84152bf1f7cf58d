import pytest
from hypothesis import given, settings

from prymfiber.errors import CapExceeded, NotEulerian, NotStable
from prymfiber.fiber.prym import (
    prym_classes_on,
    prym_fiber,
    prym_multiplicity_set,
    spin_multiplicity_set,
    supported_models,
    two_component_multiplicities,
)
from prymfiber.graph.core import DualGraph, EdgeSubset, betti1, is_stable, mask_betti1
from prymfiber.graph.cycles import is_eulerian
from prymfiber.search.enumerate import SearchSpace, enumerate_graphs

from conftest import banana, rose, stable_graphs


def brute_force_fiber(graph) -> dict[frozenset[str], tuple[int, int]]:
    """sigma -> (eta_count, multiplicity) over every eulerian subset of all 2^|E|."""
    b1 = betti1(graph)
    full = (1 << graph.delta) - 1
    out = {}
    for mask in range(1 << graph.delta):
        sigma = EdgeSubset.from_mask(graph, mask)
        if not is_eulerian(graph, sigma):
            continue
        b1_delta = mask_betti1(graph, full ^ mask)
        out[sigma.members] = (1 << (2 * graph.gnu + b1_delta), 1 << (b1 - b1_delta))
    return out


def test_banana5_fiber(banana5):
    report = prym_fiber(banana5)
    assert report.g == 6
    assert report.b1 == 4
    assert report.L_prym == {1, 4, 16}
    assert report.L_spin == {2, 8, 16}
    assert report.length == 4096
    assert report.component_count == 256 + 10 * 64 + 5 * 16
    assert len(report.records) == 16


def test_banana5_record_order(banana5):
    records = prym_fiber(banana5).records
    assert records[0].blown.members == frozenset()
    assert list(records[1].blown) == ["e1", "e2"]
    assert list(records[-1].blown) == ["e2", "e3", "e4", "e5"]
    sizes = [len(r.blown) for r in records]
    assert sizes == sorted(sizes)


def test_chain_fiber(chain):
    report = prym_fiber(chain)
    assert report.g == 4
    assert report.L_prym == {1, 4, 16}
    assert report.L_spin == {4, 8, 16}
    assert report.length == 256
    assert 1 not in report.L_spin


def test_elliptic_loop(elliptic_loop):
    report = prym_fiber(elliptic_loop)
    assert [(r.eta_count, r.multiplicity) for r in report.records] == [(8, 1), (4, 2)]
    assert report.L_prym == {1, 2}
    assert report.L_spin == {1, 2}
    assert report.length == 16


def test_smooth_curve_is_reduced():
    report = prym_fiber(DualGraph.build([("c", 3)], []))
    assert report.L_prym == {1}
    assert report.length == report.component_count == 64
    assert report.is_reduced
    assert report.plus_length == 63


def test_tree_is_reduced(tree_star):
    report = prym_fiber(tree_star)
    assert report.is_reduced
    assert all(r.is_reduced for r in report.records)


def test_trivial_record(chain):
    report = prym_fiber(chain)
    assert report.trivial_record.multiplicity == 1
    assert report.trivial_record.exponent == 0
    assert report.plus_component_count == report.component_count - 1


def test_automorphism_caveat(banana5):
    assert prym_fiber(banana5).automorphism_caveat is True
    asym = DualGraph.build([("u", 1), ("v", 2)], [("e", "u", "v")])
    assert prym_fiber(asym).automorphism_caveat is False


def test_unstable_graph_rejected():
    bad = DualGraph.build([("v", 0)], [("l", "v", "v")], validate=False)
    with pytest.raises(NotStable):
        prym_fiber(bad)


def test_cap_exceeded(triangle2):
    with pytest.raises(CapExceeded):
        prym_fiber(triangle2, cap=2)


def test_prym_classes_on(banana5):
    assert prym_classes_on(banana5, banana5.subset(["e1", "e2"])) == 64
    with pytest.raises(NotEulerian, match="u"):
        prym_classes_on(banana5, banana5.subset(["e1"]))


def test_supported_models(banana2):
    models = supported_models(banana2)
    assert [list(m) for m in models] == [[], ["e1", "e2"]]


@pytest.mark.parametrize("delta", range(2, 8))
@pytest.mark.parametrize("genera", [(0, 0), (1, 0), (2, 3)])
def test_two_component_closed_form(delta, genera):
    graph = banana(delta, genera)
    if not is_stable(graph):
        pytest.skip("unstable for these genera")
    assert prym_fiber(graph).L_prym == two_component_multiplicities(delta)


def test_two_component_examples():
    assert two_component_multiplicities(4) == {1, 4, 8}
    assert two_component_multiplicities(5) == {1, 4, 16}
    assert two_component_multiplicities(2) == {1, 2}
    with pytest.raises(ValueError):
        two_component_multiplicities(1)


def test_two_loops_spin_and_prym():
    report = prym_fiber(rose(2))
    assert report.L_prym == report.L_spin == {1, 2, 4}


@settings(max_examples=60, deadline=None)
@given(stable_graphs())
def test_length_is_2_to_2g(graph):
    report = prym_fiber(graph)
    assert report.length == 1 << (2 * report.g)
    assert report.g == graph.total_genus


@settings(max_examples=60, deadline=None)
@given(stable_graphs(max_edges=7))
def test_matches_brute_force_oracle(graph):
    report = prym_fiber(graph)
    expected = brute_force_fiber(graph)
    assert {r.blown.members: (r.eta_count, r.multiplicity) for r in report.records} == expected


@settings(max_examples=60, deadline=None)
@given(stable_graphs())
def test_light_sets_agree(graph):
    report = prym_fiber(graph)
    assert prym_multiplicity_set(graph) == report.L_prym
    assert spin_multiplicity_set(graph) == report.L_spin


def _space(max_vertices, max_edges, max_genus_per_vertex):
    return SearchSpace(max_vertices=max_vertices, max_edges=max_edges, max_genus_per_vertex=max_genus_per_vertex)


def test_length_identity_small_space():
    for graph in enumerate_graphs(_space(3, 5, 1)):
        report = prym_fiber(graph)
        assert report.length == 1 << (2 * report.g)


@pytest.mark.slow
def test_length_identity_acceptance_space():
    count = 0
    for graph in enumerate_graphs(_space(4, 7, 2)):
        report = prym_fiber(graph)
        assert report.length == 1 << (2 * report.g)
        count += 1
    assert count > 0


@pytest.mark.slow
def test_oracle_equivalence_up_to_ten_edges():
    for graph in enumerate_graphs(SearchSpace(max_vertices=3, max_edges=10, max_genus_per_vertex=0)):
        report = prym_fiber(graph)
        assert {r.blown.members: (r.eta_count, r.multiplicity) for r in report.records} == brute_force_fiber(graph)
