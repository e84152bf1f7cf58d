"""Weighted dual graphs of stable curves: data model, genus and Betti arithmetic."""
from __future__ import annotations

import logging
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

from prymfiber.errors import InputError, NotStable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class DualGraph:
    """
    Genus-weighted multigraph. Vertices are irreducible components weighted
    by geometric genus, edges are nodes; a self-node is a loop.

    With validate=True (the default) the graph must be connected and stable
    of total genus >= 2, otherwise NotStable is raised.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

        seen: set[str] = set()
        for v in self.vertices:
            if v.id in seen:
                raise InputError(f"Duplicate vertex id: {v.id}")
            if not isinstance(v.genus, int) or isinstance(v.genus, bool) or v.genus < 0:
                raise InputError(f"Vertex {v.id} must have a nonnegative integer genus, got {v.genus!r}")
            seen.add(v.id)
        if not self.vertices:
            raise InputError("Graph must have at least one vertex")

        edge_ids: set[str] = set()
        for e in self.edges:
            if e.id in edge_ids:
                raise InputError(f"Duplicate edge id: {e.id}")
            edge_ids.add(e.id)
            for end in e.ends:
                if end not in seen:
                    raise InputError(f"Edge {e.id} ends at unknown vertex {end}")

        if validate:
            if not nx.is_connected(self.to_networkx()):
                raise NotStable("Graph is not connected")
            check_stable(self)

    @classmethod
    def build(
        cls,
        vertices: Iterable[tuple[str, int]],
        edges: Iterable[tuple[str, str, str]],
        validate: bool = True,
    ) -> DualGraph:
        """Build from (id, genus) and (id, u, v) tuples."""
        return cls(
            tuple(Vertex(vid, genus) for vid, genus in vertices),
            tuple(Edge(eid, (u, v)) for eid, u, v in edges),
            validate,
        )

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    @cached_property
    def edge_index(self) -> dict[str, int]:
        """Edge id -> position in file order; bit position in edge masks."""
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _genus(self) -> dict[str, int]:
        return {v.id: v.genus for v in self.vertices}

    @cached_property
    def _edges_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def genus_of(self, vertex_id: str) -> int:
        """Geometric genus of a component."""
        return self._genus[vertex_id]

    def edge(self, edge_id: str) -> Edge:
        return self._edges_by_id[edge_id]

    @property
    def delta(self) -> int:
        """Number of nodes."""
        return len(self.edges)

    @property
    def gamma(self) -> int:
        """Number of irreducible components."""
        return len(self.vertices)

    @property
    def gnu(self) -> int:
        """Genus of the normalization."""
        return sum(v.genus for v in self.vertices)

    @property
    def total_genus(self) -> int:
        """Arithmetic genus g = gnu + b1."""
        return self.gnu + betti1(self)

    @property
    def has_loops(self) -> bool:
        """Any self-node."""
        return any(e.is_loop for e in self.edges)

    def valency(self, vertex_id: str) -> int:
        return self.valencies[vertex_id]

    @cached_property
    def valencies(self) -> dict[str, int]:
        """Valency of every vertex; loops count twice."""
        return valency_profile(self, self.full_subset())

    def full_subset(self) -> EdgeSubset:
        """All nodes."""
        return EdgeSubset(self, frozenset(self.edge_ids))

    def empty_subset(self) -> EdgeSubset:
        return EdgeSubset(self, frozenset())

    def subset(self, edge_ids: Iterable[str]) -> EdgeSubset:
        """EdgeSubset from edge ids; raises InputError for unknown ids."""
        return EdgeSubset(self, frozenset(edge_ids))

    def to_networkx(self) -> nx.MultiGraph:
        """MultiGraph keyed by edge id, nodes carry the genus attribute."""
        g = nx.MultiGraph()
        for v in self.vertices:
            g.add_node(v.id, genus=v.genus)
        for e in self.edges:
            g.add_edge(e.ends[0], e.ends[1], key=e.id)
        return g


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edges of a fixed graph: blown-up nodes, or a subgraph for b1 counts."""

    graph: DualGraph = field(repr=False)
    members: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        unknown = self.members - set(self.graph.edge_ids)
        if unknown:
            raise InputError(f"Edges not in graph: {', '.join(sorted(unknown))}")

    @classmethod
    def from_mask(cls, graph: DualGraph, mask: int) -> EdgeSubset:
        return cls(graph, frozenset(eid for i, eid in enumerate(graph.edge_ids) if mask >> i & 1))

    @cached_property
    def mask(self) -> int:
        index = self.graph.edge_index
        out = 0
        for eid in self.members:
            out |= 1 << index[eid]
        return out

    @property
    def ordered(self) -> tuple[str, ...]:
        """Member ids in the graph's edge order."""
        return tuple(eid for eid in self.graph.edge_ids if eid in self.members)

    def complement(self) -> EdgeSubset:
        return EdgeSubset(self.graph, frozenset(self.graph.edge_ids) - self.members)

    def __xor__(self, other: EdgeSubset) -> EdgeSubset:
        return EdgeSubset(self.graph, self.members ^ other.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ordered)

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.members


def exceptional_id(edge_id: str) -> str:
    """Component id of the exceptional component inserted on a blown edge."""
    return f"E[{edge_id}]"


@dataclass(frozen=True)
class QuasistableModel:
    """
    Blow-up of a stable curve at the nodes in `blown`. Each blown edge u-v
    becomes an exceptional genus-0 component attached at q1 (on u) and q2 (on v).
    """

    base: DualGraph
    blown: EdgeSubset

    def __post_init__(self) -> None:
        if self.blown.graph != self.base:
            raise InputError("Blown edge subset belongs to a different graph")
        clash = {exceptional_id(e) for e in self.blown.members} & set(self.base.vertex_ids)
        if clash:
            raise InputError(f"Vertex ids collide with exceptional components: {sorted(clash)}")

    @cached_property
    def components(self) -> tuple[str, ...]:
        """Base vertices in graph order, then exceptional components in edge order."""
        return self.base.vertex_ids + tuple(exceptional_id(e) for e in self.blown.ordered)

    def is_exceptional(self, component: str) -> bool:
        return component not in self.base.vertex_index

    def component_genus(self, component: str) -> int:
        return 0 if self.is_exceptional(component) else self.base.genus_of(component)

    @cached_property
    def x_edges(self) -> tuple[tuple[str, str, str], ...]:
        """Edges of the dual graph of X as (id, end, end): unblown nodes and the q1/q2 attachments."""
        out: list[tuple[str, str, str]] = []
        for e in self.base.edges:
            u, v = e.ends
            if e.id in self.blown:
                exc = exceptional_id(e.id)
                out.append((f"{e.id}/q1", u, exc))
                out.append((f"{e.id}/q2", exc, v))
            else:
                out.append((e.id, u, v))
        return tuple(out)

    @cached_property
    def blown_valency(self) -> dict[str, int]:
        """m_v: blown half-edges at each base vertex."""
        return valency_profile(self.base, self.blown)

    @property
    def total_genus(self) -> int:
        return self.base.total_genus


def _count_components(vertices: Iterable[str], pairs: Iterable[tuple[str, str]]) -> int:
    """Connected components of the simple graph on `vertices` spanned by `pairs`."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(pairs)
    return nx.number_connected_components(g)


def betti1(graph: DualGraph) -> int:
    """b1 = |E| - |V| + #components."""
    pairs = [e.ends for e in graph.edges]
    return len(graph.edges) - len(graph.vertices) + _count_components(graph.vertex_ids, pairs)


def mask_betti1(graph: DualGraph, mask: int) -> int:
    """b1 of the subgraph spanned by the edges in a bitmask, over edge-incident vertices."""
    pairs = [e.ends for i, e in enumerate(graph.edges) if mask >> i & 1]
    if not pairs:
        return 0
    touched = {x for pair in pairs for x in pair}
    return len(pairs) - len(touched) + _count_components(touched, pairs)


def subgraph_betti1(sub: EdgeSubset) -> int:
    return mask_betti1(sub.graph, sub.mask)


def valency_profile(graph: DualGraph, sub: EdgeSubset) -> dict[str, int]:
    """Half-edges of `sub` at every vertex; a loop counts twice."""
    profile = {vid: 0 for vid in graph.vertex_ids}
    for eid in sub.members:
        u, v = graph.edge(eid).ends
        profile[u] += 1
        profile[v] += 1
    return profile


def unstable_vertices(graph: DualGraph) -> list[str]:
    return [
        v.id for v in graph.vertices
        if 2 * v.genus - 2 + graph.valencies[v.id] <= 0
    ]


def is_stable(graph: DualGraph) -> bool:
    return not unstable_vertices(graph) and graph.total_genus >= 2


def check_stable(graph: DualGraph) -> None:
    """Raise NotStable naming the first violated condition."""
    bad = unstable_vertices(graph)
    if bad:
        v = bad[0]
        raise NotStable(
            f"Vertex {v} violates 2g-2+valency > 0 "
            f"(genus {graph.genus_of(v)}, valency {graph.valencies[v]})"
        )
    if graph.total_genus < 2:
        raise NotStable(f"Total genus {graph.total_genus} is below 2")
