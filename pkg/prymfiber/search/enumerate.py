"""Exhaustive enumeration of small stable dual graphs, one per isomorphism class."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Callable, Iterator

import networkx as nx

from prymfiber.errors import InputError, SpaceTooLarge
from prymfiber.graph.core import DualGraph, betti1, is_stable
from prymfiber.graph.cycles import is_eulerian
from prymfiber.search.canonical import Adjacency, minimizing_permutations, pair_slots, slot_maps

logger = logging.getLogger(__name__)


def _even_valency_ge4(graph: DualGraph) -> bool:
    return all(v % 2 == 0 and v >= 4 for v in graph.valencies.values())


PREDICATES: dict[str, Callable[[DualGraph], bool]] = {
    "eulerian": lambda g: is_eulerian(g, g.full_subset()),
    "min_valency_4": lambda g: min(g.valencies.values()) >= 4,
    "even_valency_ge4": _even_valency_ge4,
    "compact_type": lambda g: betti1(g) == 0,
    "rational_components": lambda g: all(v.genus == 0 for v in g.vertices),
}


@dataclass(frozen=True)
class SearchSpace:
    max_vertices: int
    max_edges: int
    max_genus_per_vertex: int
    min_genus: int = 2
    max_genus: int | None = None
    min_vertices: int = 1
    predicates: tuple[str, ...] = ()
    candidate_limit: int = 10_000_000

    def __post_init__(self) -> None:
        for name in ("max_vertices", "max_edges", "max_genus_per_vertex", "min_genus", "min_vertices"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise InputError(f"SearchSpace.{name} must be a nonnegative integer, got {value!r}")
        if self.min_vertices < 1:
            raise InputError("SearchSpace.min_vertices must be at least 1")
        unknown = [p for p in self.predicates if p not in PREDICATES]
        if unknown:
            raise InputError(f"Unknown predicates {unknown}; known: {sorted(PREDICATES)}")

    def candidate_estimate(self) -> int:
        """Upper bound on raw candidates: edge multisets times genus vectors."""
        total = 0
        for n in range(self.min_vertices, self.max_vertices + 1):
            slots = n * (n + 1) // 2
            total += comb(slots + self.max_edges, self.max_edges) * (self.max_genus_per_vertex + 1) ** n
        return total

    def with_predicates(self, *names: str) -> SearchSpace:
        extra = tuple(n for n in names if n not in self.predicates)
        return SearchSpace(
            self.max_vertices, self.max_edges, self.max_genus_per_vertex,
            self.min_genus, self.max_genus, self.min_vertices,
            self.predicates + extra, self.candidate_limit,
        )


def _connected(n: int, adj: Adjacency) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for (i, j), mult in zip(pair_slots(n), adj) if mult and i != j)
    return nx.is_connected(g)


def skeletons(n: int, max_edges: int) -> list[Adjacency]:
    """Connected multigraph shapes on n vertices with at most max_edges edges, canonical and sorted."""
    slots = len(pair_slots(n))
    found: set[Adjacency] = set()
    for m in range(max_edges + 1):
        for combo in combinations_with_replacement(range(slots), m):
            adj = [0] * slots
            for k in combo:
                adj[k] += 1
            adj_t = tuple(adj)
            if not _connected(n, adj_t):
                continue
            found.add(minimizing_permutations(adj_t, n)[0])
    return sorted(found)


def realize(n: int, adj: Adjacency, genera: tuple[int, ...]) -> DualGraph:
    """Vertices v1..vn, edges e1.. in slot order."""
    vertices = [(f"v{i + 1}", genera[i]) for i in range(n)]
    edges = []
    for (i, j), mult in zip(pair_slots(n), adj):
        for _ in range(mult):
            edges.append((f"e{len(edges) + 1}", f"v{i + 1}", f"v{j + 1}"))
    return DualGraph.build(vertices, edges, validate=False)


def enumerate_graphs(space: SearchSpace) -> Iterator[DualGraph]:
    """Every stable connected graph in the space, exactly once up to isomorphism."""
    estimate = space.candidate_estimate()
    if estimate > space.candidate_limit:
        raise SpaceTooLarge(f"Search space has up to {estimate} candidates; limit is {space.candidate_limit}")
    predicates = [PREDICATES[name] for name in space.predicates]

    emitted = 0
    for n in range(space.min_vertices, space.max_vertices + 1):
        for adj in skeletons(n, space.max_edges):
            autos = [perm for perm, sources in slot_maps(n) if tuple(adj[k] for k in sources) == adj]
            b1 = sum(adj) - n + 1
            for genera in product(range(space.max_genus_per_vertex + 1), repeat=n):
                if any(tuple(genera[p] for p in perm) < genera for perm in autos):
                    continue
                g = sum(genera) + b1
                if g < space.min_genus or (space.max_genus is not None and g > space.max_genus):
                    continue
                graph = realize(n, adj, genera)
                if not is_stable(graph):
                    continue
                if not all(pred(graph) for pred in predicates):
                    continue
                emitted += 1
                yield graph
    logger.info("Enumerated %d graphs (bounds V<=%d E<=%d genus<=%d)",
                emitted, space.max_vertices, space.max_edges, space.max_genus_per_vertex)
