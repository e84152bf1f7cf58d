"""
Dual graph of the admissible double cover C -> Z attached to a Prym support
(Gamma, Sigma) and explicit monodromy data.

Over a vertex v the cover is either connected (one vertex, genus
2 g_v - 1 + m_v / 2 by Riemann-Hurwitz, m_v branch points) or split (two
copies of genus g_v). Unblown nodes lift to two nodes swapped by the
involution; blown nodes lift to one node fixed by it, branches not exchanged.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

import networkx as nx

from prymfiber.errors import Disconnected, NotEulerian, SplitInvalid
from prymfiber.graph.core import DualGraph, Edge, EdgeSubset, Vertex, betti1, is_stable, valency_profile
from prymfiber.graph.cycles import is_eulerian, odd_vertices

logger = logging.getLogger(__name__)

SPLIT = "split"
CONNECTED = "connected"


@dataclass(frozen=True)
class MonodromyData:
    split_choice: Mapping[str, str] = field(default_factory=dict)
    edge_twist: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class CoverGraph:
    base: DualGraph = field(repr=False)
    blown: EdgeSubset = field(repr=False)
    cover: DualGraph
    vertex_involution: Mapping[str, str]
    # edge -> (image edge, whether the image runs backwards)
    edge_involution: Mapping[str, tuple[str, bool]]
    vertex_projection: Mapping[str, str]
    edge_projection: Mapping[str, str]
    fixed_edges: frozenset[str]



def sheet(vertex_id: str, k: int) -> str:
    """Id of the k-th cover vertex over a base vertex."""
    return f"{vertex_id}~{k}"


def lift(edge_id: str, k: int) -> str:
    """Id of the k-th cover edge over a base edge."""
    return f"{edge_id}~{k}"


def check_monodromy(graph: DualGraph, blown: EdgeSubset, mono: MonodromyData) -> dict[str, str]:
    """Resolved split/connected type of every vertex; raises SplitInvalid."""
    m = valency_profile(graph, blown)
    unknown = set(mono.split_choice) - set(graph.vertex_ids)
    if unknown:
        raise SplitInvalid(f"Split choice for unknown vertices: {sorted(unknown)}")
    kinds: dict[str, str] = {}
    for v in graph.vertices:
        choice = mono.split_choice.get(v.id)
        if choice not in (None, SPLIT, CONNECTED):
            raise SplitInvalid(f"Vertex {v.id}: choice must be '{SPLIT}' or '{CONNECTED}', got {choice!r}")
        if m[v.id] > 0:
            if choice == SPLIT:
                raise SplitInvalid(f"Vertex {v.id} has {m[v.id]} branch points and cannot split")
            kinds[v.id] = CONNECTED
        elif choice is None:
            raise SplitInvalid(f"Vertex {v.id} is unbranched and needs a split/connected choice")
        elif choice == CONNECTED and v.genus == 0:
            raise SplitInvalid(f"Vertex {v.id} is rational and unbranched; no connected double cover exists")
        else:
            kinds[v.id] = choice
    for eid, bit in mono.edge_twist.items():
        if eid not in graph.edge_index:
            raise SplitInvalid(f"Twist for unknown edge {eid}")
        if bit not in (0, 1):
            raise SplitInvalid(f"Twist of edge {eid} must be 0 or 1, got {bit!r}")
    return kinds


def build_cover(graph: DualGraph, blown: EdgeSubset, mono: MonodromyData) -> CoverGraph:
    if not is_eulerian(graph, blown):
        raise NotEulerian(f"Blown nodes are not eulerian; odd valency at {', '.join(odd_vertices(graph, blown))}")
    kinds = check_monodromy(graph, blown, mono)
    m = valency_profile(graph, blown)

    vertices: list[Vertex] = []
    v_inv: dict[str, str] = {}
    v_proj: dict[str, str] = {}
    for v in graph.vertices:
        if kinds[v.id] == CONNECTED:
            vertices.append(Vertex(v.id, 2 * v.genus - 1 + m[v.id] // 2))
            v_inv[v.id] = v.id
            v_proj[v.id] = v.id
        else:
            for k in (0, 1):
                vertices.append(Vertex(sheet(v.id, k), v.genus))
                v_inv[sheet(v.id, k)] = sheet(v.id, 1 - k)
                v_proj[sheet(v.id, k)] = v.id

    def endpoint(vid: str, k: int) -> str:
        return vid if kinds[vid] == CONNECTED else sheet(vid, k)

    edges: list[Edge] = []
    e_inv: dict[str, tuple[str, bool]] = {}
    e_proj: dict[str, str] = {}
    fixed: set[str] = set()
    for e in graph.edges:
        a, b = e.ends
        if e.id in blown:
            edges.append(Edge(e.id, (a, b)))
            e_inv[e.id] = (e.id, False)
            e_proj[e.id] = e.id
            fixed.add(e.id)
            continue
        twist = mono.edge_twist.get(e.id, 0) if kinds[a] == SPLIT and kinds[b] == SPLIT else 0
        for k in (0, 1):
            edges.append(Edge(lift(e.id, k), (endpoint(a, k), endpoint(b, k ^ twist))))
            e_inv[lift(e.id, k)] = (lift(e.id, 1 - k), False)
            e_proj[lift(e.id, k)] = e.id

    cover = DualGraph(tuple(vertices), tuple(edges), validate=False)
    if not nx.is_connected(cover.to_networkx()):
        raise Disconnected("Monodromy gives a disconnected cover (trivial eta)")

    cg = CoverGraph(
        base=graph,
        blown=blown,
        cover=cover,
        vertex_involution=v_inv,
        edge_involution=e_inv,
        vertex_projection=v_proj,
        edge_projection=e_proj,
        fixed_edges=frozenset(fixed),
    )
    logger.debug("Built cover with %d vertices, %d edges, genus %d", cover.gamma, cover.delta, cover_genus(cg))
    return cg


def quotient_graph(cg: CoverGraph) -> DualGraph:
    """Contract involution orbits; vertices keep the base genus."""
    base = cg.base
    present = set(cg.vertex_projection.values())
    vertices = tuple(Vertex(vid, base.genus_of(vid)) for vid in base.vertex_ids if vid in present)
    edges = []
    seen: set[str] = set()
    for e in cg.cover.edges:
        target = cg.edge_projection[e.id]
        if target in seen:
            continue
        seen.add(target)
        edges.append(Edge(target, (cg.vertex_projection[e.ends[0]], cg.vertex_projection[e.ends[1]])))
    order = base.edge_index
    edges.sort(key=lambda x: order.get(x.id, len(order)))
    return DualGraph(vertices, tuple(edges), validate=False)


def _same_ends(x: tuple[str, str], y: tuple[str, str]) -> bool:
    return sorted(x) == sorted(y)


def admissibility_diagnostics(cg: CoverGraph) -> list[str]:
    """Every violated admissibility condition, as readable messages; empty when admissible."""
    problems: list[str] = []
    cover, base = cg.cover, cg.base
    inv, einv = cg.vertex_involution, cg.edge_involution

    for vid in cover.vertex_ids:
        image = inv.get(vid)
        if image is None or inv.get(image) != vid:
            problems.append(f"vertex involution is not an involution at {vid}")
        elif cg.vertex_projection[image] != cg.vertex_projection[vid]:
            problems.append(f"involution does not commute with projection at {vid}")

    ends = {e.id: e.ends for e in cover.edges}
    for e in cover.edges:
        image, backwards = einv.get(e.id, (None, False))
        if image is None or einv.get(image, (None,))[0] != e.id:
            problems.append(f"edge involution is not an involution at {e.id}")
            continue
        if cg.edge_projection[image] != cg.edge_projection[e.id]:
            problems.append(f"involution does not commute with projection at {e.id}")
        u, v = e.ends
        moved = (inv.get(v), inv.get(u)) if backwards else (inv.get(u), inv.get(v))
        if moved != ends[image]:
            problems.append(f"edge involution at {e.id} disagrees with the vertex involution")
        if image == e.id and (backwards or inv.get(u) != u or inv.get(v) != v):
            problems.append(f"involution exchanges the branches of fixed node {e.id}")

    fixed = frozenset(eid for eid, (image, _) in einv.items() if image == eid)
    if fixed != cg.fixed_edges:
        problems.append("recorded fixed edges differ from the fixed locus of the involution")
    over_blown = sorted(cg.edge_projection[eid] for eid in fixed)
    if over_blown != sorted(cg.blown.members):
        problems.append("fixed nodes do not map bijectively onto the blown nodes")

    fixed_half_edges = valency_profile(cover, cover.subset(e for e in fixed if e in cover.edge_index))
    for vtx in cover.vertices:
        if inv.get(vtx.id) != vtx.id:
            continue
        below = cg.vertex_projection[vtx.id]
        branch_points = 2 * vtx.genus - 2 - 2 * (2 * base.genus_of(below) - 2)
        if branch_points != fixed_half_edges[vtx.id]:
            problems.append(
                f"vertex {vtx.id} has {branch_points} ramification points but "
                f"{fixed_half_edges[vtx.id]} fixed branches; fixed points must be nodes"
            )

    if not nx.is_connected(cover.to_networkx()):
        problems.append("cover is disconnected")
    elif not is_stable(cover):
        problems.append("cover is not stable")

    expected = 2 * base.total_genus - 1
    if cover_genus(cg) != expected:
        problems.append(f"cover genus {cover_genus(cg)} != 2g-1 = {expected}")

    quotient = quotient_graph(cg)
    if set(quotient.vertex_ids) != set(base.vertex_ids):
        problems.append("quotient vertices differ from the base")
    if len(quotient.edges) != len(base.edges) or any(
        e.id not in base.edge_index or not _same_ends(e.ends, base.edge(e.id).ends) for e in quotient.edges
    ):
        problems.append("quotient edges differ from the base")
    for target in base.edge_ids:
        preimages = [eid for eid, t in cg.edge_projection.items() if t == target]
        expected_count = 1 if target in cg.blown else 2
        if len(preimages) != expected_count:
            problems.append(f"base node {target} has {len(preimages)} preimages, expected {expected_count}")
    return problems


def verify_admissible(cg: CoverGraph) -> bool:
    problems = admissibility_diagnostics(cg)
    for problem in problems:
        logger.warning("Inadmissible cover: %s", problem)
    return not problems


def cover_genus(cg: CoverGraph) -> int:
    return cg.cover.gnu + betti1(cg.cover)
