"""
Canonical forms of small genus-weighted multigraphs.

Brute force over vertex permutations: the canonical key is the lexicographic
minimum of (upper-triangular multiplicity vector, genus vector) over all
relabelings. Exact, factorial in |V|; intended for |V| <= 8.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from prymfiber.errors import SpaceTooLarge
from prymfiber.graph.core import DualGraph

MAX_CANONICAL_VERTICES = 8

Adjacency = tuple[int, ...]
Permutation = tuple[int, ...]


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant byte signature: vertex count, adjacency and genera under the minimal labeling."""

    signature: bytes

    def __str__(self) -> str:
        return self.signature.decode("ascii")


def pair_slots(n: int) -> list[tuple[int, int]]:
    """Unordered vertex pairs (i <= j); diagonal slots hold loops."""
    return [(i, j) for i in range(n) for j in range(i, n)]


@lru_cache(maxsize=None)
def _slot_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pair_slots(n))}


@lru_cache(maxsize=None)
def slot_maps(n: int) -> tuple[tuple[Permutation, tuple[int, ...]], ...]:
    """For every permutation of n vertices: (perm, source slot of each target slot)."""
    slot = _slot_index(n)
    out = []
    for perm in permutations(range(n)):
        sources = []
        for i, j in pair_slots(n):
            a, b = perm[i], perm[j]
            sources.append(slot[(a, b) if a <= b else (b, a)])
        out.append((perm, tuple(sources)))
    return tuple(out)


def adjacency_vector(graph: DualGraph) -> Adjacency:
    """Edge multiplicity of every slot of pair_slots, in the graph's vertex order."""
    index = graph.vertex_index
    slot = _slot_index(graph.gamma)
    counts = [0] * len(slot)
    for e in graph.edges:
        a, b = sorted((index[e.ends[0]], index[e.ends[1]]))
        counts[slot[(a, b)]] += 1
    return tuple(counts)


def permute_adjacency(adj: Adjacency, n: int, perm: Sequence[int]) -> Adjacency:
    """New vertex i is old vertex perm[i]."""
    slot = _slot_index(n)
    out = []
    for i, j in pair_slots(n):
        a, b = perm[i], perm[j]
        out.append(adj[slot[(a, b) if a <= b else (b, a)]])
    return tuple(out)


def minimizing_permutations(adj: Adjacency, n: int) -> tuple[Adjacency, list[Permutation]]:
    """Minimal relabeled adjacency and every permutation attaining it."""
    best: Adjacency | None = None
    attaining: list[Permutation] = []
    for perm, sources in slot_maps(n):
        cand = tuple(adj[k] for k in sources)
        if best is None or cand < best:
            best, attaining = cand, [perm]
        elif cand == best:
            attaining.append(perm)
    assert best is not None
    return best, attaining


def encode_signature(n: int, adj: Adjacency, genera: Sequence[int]) -> CanonicalForm:
    text = f"{n}|{','.join(map(str, adj))}|{','.join(map(str, genera))}"
    return CanonicalForm(text.encode("ascii"))


def _check_size(graph: DualGraph) -> None:
    if graph.gamma > MAX_CANONICAL_VERTICES:
        raise SpaceTooLarge(
            f"Canonical form is brute force; {graph.gamma} vertices exceeds {MAX_CANONICAL_VERTICES}"
        )


def canonical_form(graph: DualGraph) -> CanonicalForm:
    """Minimal adjacency over all labelings, then the minimal genus vector among the labelings attaining it."""
    _check_size(graph)
    n = graph.gamma
    genera = [v.genus for v in graph.vertices]
    best_adj, attaining = minimizing_permutations(adjacency_vector(graph), n)
    best_genus = min(tuple(genera[p] for p in perm) for perm in attaining)
    return encode_signature(n, best_adj, best_genus)


def are_isomorphic(a: DualGraph, b: DualGraph) -> bool:
    return canonical_form(a) == canonical_form(b)


def vertex_automorphisms(graph: DualGraph) -> list[Permutation]:
    """Vertex permutations preserving edge multiplicities and genera."""
    _check_size(graph)
    n = graph.gamma
    adj = adjacency_vector(graph)
    genera = [v.genus for v in graph.vertices]
    return [
        perm for perm, sources in slot_maps(n)
        if all(genera[perm[i]] == genera[i] for i in range(n))
        and tuple(adj[k] for k in sources) == adj
    ]


def automorphism_count(graph: DualGraph) -> int:
    """|Aut| of the multigraph: vertex automorphisms times permutations of parallel edges."""
    edge_perms = math.prod(math.factorial(m) for m in adjacency_vector(graph))
    return len(vertex_automorphisms(graph)) * edge_perms


def has_nontrivial_automorphism(graph: DualGraph) -> bool:
    return automorphism_count(graph) > 1
