"""GF(2) cycle space of a dual graph: eulerian subgraphs, fundamental basis, enumeration."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx

from prymfiber.errors import CapExceeded
from prymfiber.graph.core import DualGraph, EdgeSubset, betti1, valency_profile

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 24


def is_eulerian(graph: DualGraph, sub: EdgeSubset) -> bool:
    """True iff every vertex carries an even number of half-edges of `sub`."""
    return all(count % 2 == 0 for count in valency_profile(graph, sub).values())


def odd_vertices(graph: DualGraph, sub: EdgeSubset) -> list[str]:
    profile = valency_profile(graph, sub)
    return [vid for vid in graph.vertex_ids if profile[vid] % 2]


@dataclass(frozen=True)
class CycleSpace:
    graph: DualGraph = field(repr=False)
    basis: tuple[EdgeSubset, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.basis)

    def __len__(self) -> int:
        return 1 << self.rank


class _SpanningTree:
    """DFS spanning tree with parent pointers; tree paths as edge bitmasks."""

    def __init__(self, graph: DualGraph):
        self.graph = graph
        self.parent: dict[str, str | None] = {}
        self.parent_bit: dict[str, int] = {}
        self.depth: dict[str, int] = {}
        self.tree_bits: set[int] = set()
        self._build()

    def _build(self) -> None:
        g = self.graph.to_networkx()
        index = self.graph.edge_index
        for root in self.graph.vertex_ids:
            if root in self.depth:
                continue
            self.parent[root] = None
            self.depth[root] = 0
            for u, v in nx.dfs_edges(g, source=root):
                # first edge in file order between u and v
                eid = min(g[u][v], key=index.__getitem__)
                bit = index[eid]
                self.parent[v] = u
                self.parent_bit[v] = bit
                self.depth[v] = self.depth[u] + 1
                self.tree_bits.add(bit)

    def path_mask(self, u: str, v: str) -> int:
        mask = 0
        while self.depth[u] > self.depth[v]:
            mask ^= 1 << self.parent_bit[u]
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            mask ^= 1 << self.parent_bit[v]
            v = self.parent[v]
        while u != v:
            mask ^= 1 << self.parent_bit[u]
            mask ^= 1 << self.parent_bit[v]
            u, v = self.parent[u], self.parent[v]
        return mask


def cycle_basis(graph: DualGraph) -> CycleSpace:
    """Fundamental cycles of a DFS spanning tree, one per non-tree edge in edge order."""
    tree = _SpanningTree(graph)
    basis: list[EdgeSubset] = []
    for i, e in enumerate(graph.edges):
        if i in tree.tree_bits:
            continue
        mask = (1 << i) ^ tree.path_mask(*e.ends)
        basis.append(EdgeSubset.from_mask(graph, mask))
    space = CycleSpace(graph, tuple(basis))
    if space.rank != betti1(graph):
        raise AssertionError(f"cycle basis rank {space.rank} != b1 {betti1(graph)}")
    logger.debug("Cycle basis of rank %d over %d edges", space.rank, graph.delta)
    return space


def _check_cap(rank: int, cap: int) -> None:
    if rank > cap:
        raise CapExceeded(
            f"Cycle space has 2^{rank} elements; enumeration cap is 2^{cap}"
        )


def eulerian_masks(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> Iterator[int]:
    """Every element of the cycle space as an edge bitmask, Gray-code order, empty set first."""
    masks = cycle_basis(graph).masks
    _check_cap(len(masks), cap)
    current = 0
    yield current
    for i in range(1, 1 << len(masks)):
        current ^= masks[(i & -i).bit_length() - 1]
        yield current


def enumerate_eulerian(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> Iterator[EdgeSubset]:
    for mask in eulerian_masks(graph, cap):
        yield EdgeSubset.from_mask(graph, mask)
