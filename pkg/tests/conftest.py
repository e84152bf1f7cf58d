"""Shared graphs: bananas, chains, trees and the double triangle."""
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, strategies as st

from prymfiber.graph.core import DualGraph, is_stable


def banana(delta: int, genera: tuple[int, int] = (0, 0)) -> DualGraph:
    """Two components meeting in delta points."""
    return DualGraph.build(
        [("u", genera[0]), ("v", genera[1])],
        [(f"e{i + 1}", "u", "v") for i in range(delta)],
    )


def chain_of_bananas() -> DualGraph:
    """u - v - w, three nodes between each neighbouring pair, all rational."""
    edges = [(f"a{i}", "u", "v") for i in (1, 2, 3)] + [(f"b{i}", "v", "w") for i in (1, 2, 3)]
    return DualGraph.build([("u", 0), ("v", 0), ("w", 0)], edges)


def double_triangle(genera: tuple[int, int, int] = (0, 0, 0)) -> DualGraph:
    vertices = list(zip(("x", "y", "z"), genera))
    edges = []
    for a, b in combinations(("x", "y", "z"), 2):
        edges += [(f"{a}{b}1", a, b), (f"{a}{b}2", a, b)]
    return DualGraph.build(vertices, edges)


def rose(loops: int, genus: int = 0) -> DualGraph:
    """One component with `loops` self-nodes."""
    return DualGraph.build([("v", genus)], [(f"l{i + 1}", "v", "v") for i in range(loops)])


@pytest.fixture
def banana5():
    return banana(5, (1, 1))


@pytest.fixture
def banana5_rational():
    return banana(5)


@pytest.fixture
def chain():
    return chain_of_bananas()


@pytest.fixture
def elliptic_loop():
    return rose(1, genus=1)


@pytest.fixture
def triangle2():
    return double_triangle()


@pytest.fixture
def tree_pair():
    return DualGraph.build([("u", 1), ("v", 1)], [("e", "u", "v")])


@pytest.fixture
def tree_star():
    """Rational centre with three elliptic tails."""
    return DualGraph.build(
        [("c", 0), ("p", 1), ("q", 1), ("r", 1)],
        [("ep", "c", "p"), ("eq", "c", "q"), ("er", "c", "r")],
    )


@pytest.fixture
def banana2():
    return banana(2, (1, 1))


@st.composite
def stable_graphs(draw, max_vertices: int = 3, max_edges: int = 6, max_genus: int = 2):
    """Small connected stable dual graphs; ends drawn from vertex indices."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    genera = draw(st.lists(st.integers(min_value=0, max_value=max_genus), min_size=n, max_size=n))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=max_edges,
    ))
    graph = DualGraph.build(
        [(f"v{i}", g) for i, g in enumerate(genera)],
        [(f"e{k}", f"v{a}", f"v{b}") for k, (a, b) in enumerate(pairs)],
        validate=False,
    )
    assume(nx.is_connected(graph.to_networkx()))
    assume(is_stable(graph))
    return graph
