"""
Prym fiber over a stable curve, computed from its dual graph.

A quasistable model X is fixed by the set of blown-up nodes Sigma. X supports
Prym curves iff Sigma is eulerian; it then carries 2^(2 gnu + b1(Delta))
classes of eta, each of multiplicity 2^(b1(Gamma) - b1(Delta)), where Delta is
the complement of Sigma.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from prymfiber.errors import NotEulerian, NotStable
from prymfiber.graph.core import DualGraph, EdgeSubset, betti1, check_stable, mask_betti1
from prymfiber.graph.cycles import DEFAULT_CYCLE_CAP, eulerian_masks, is_eulerian, odd_vertices
from prymfiber.search.canonical import MAX_CANONICAL_VERTICES, has_nontrivial_automorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberComponentRecord:
    blown: EdgeSubset
    delta: EdgeSubset
    eta_count: int
    multiplicity: int

    @property
    def exponent(self) -> int:
        """log2 of the multiplicity: b1(Gamma) - b1(Delta)."""
        return self.multiplicity.bit_length() - 1

    @property
    def is_reduced(self) -> bool:
        return self.multiplicity == 1


@dataclass(frozen=True)
class FiberReport:
    graph: DualGraph = field(repr=False)
    records: tuple[FiberComponentRecord, ...]
    component_count: int
    length: int
    L_prym: frozenset[int]
    L_spin: frozenset[int]
    g: int
    gnu: int
    b1: int
    automorphism_caveat: bool | None = None

    @property
    def prym_exponents(self) -> list[int]:
        return sorted(m.bit_length() - 1 for m in self.L_prym)

    @property
    def spin_exponents(self) -> list[int]:
        return sorted(m.bit_length() - 1 for m in self.L_spin)

    @property
    def trivial_record(self) -> FiberComponentRecord:
        """Record of X = Z; its eta classes include the trivial one."""
        return self.records[0]

    @property
    def plus_component_count(self) -> int:
        """Components carrying a nontrivial eta."""
        return self.component_count - 1

    @property
    def plus_length(self) -> int:
        return self.length - 1

    @property
    def is_reduced(self) -> bool:
        return self.L_prym == frozenset({1})


def _require_stable(graph: DualGraph) -> None:
    # graphs built with validate=False reach here unchecked
    if betti1(graph) != graph.delta - graph.gamma + 1:
        raise NotStable("Graph is not connected")
    check_stable(graph)


def _sort_key(graph: DualGraph, mask: int) -> tuple[int, tuple[int, ...]]:
    bits = tuple(i for i in range(graph.delta) if mask >> i & 1)
    return len(bits), bits


def prym_classes_on(graph: DualGraph, blown: EdgeSubset) -> int:
    """Number of eta (up to inessential isomorphism) supported on the model blowing up `blown`."""
    if not is_eulerian(graph, blown):
        raise NotEulerian(
            f"Blown nodes are not eulerian; odd valency at {', '.join(odd_vertices(graph, blown))}"
        )
    return 1 << (2 * graph.gnu + mask_betti1(graph, blown.complement().mask))


def supported_models(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> list[EdgeSubset]:
    """Blown-node sets of quasistable models supporting Prym curves, in report order."""
    masks = sorted(eulerian_masks(graph, cap), key=lambda m: _sort_key(graph, m))
    return [EdgeSubset.from_mask(graph, m) for m in masks]


def spin_multiplicity_set(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> frozenset[int]:
    """{2^(b1(Gamma) - b1(Delta)) : Delta eulerian}; Delta itself ranges over the cycle space."""
    _require_stable(graph)
    b1 = betti1(graph)
    return frozenset(1 << (b1 - mask_betti1(graph, m)) for m in eulerian_masks(graph, cap))


def prym_fiber(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> FiberReport:
    _require_stable(graph)
    b1 = betti1(graph)
    gnu = graph.gnu
    full = (1 << graph.delta) - 1

    rows: list[tuple[int, int, int]] = []
    for sigma in eulerian_masks(graph, cap):
        b1_delta = mask_betti1(graph, full ^ sigma)
        rows.append((sigma, 1 << (2 * gnu + b1_delta), 1 << (b1 - b1_delta)))
    rows.sort(key=lambda row: _sort_key(graph, row[0]))

    records = tuple(
        FiberComponentRecord(
            blown=EdgeSubset.from_mask(graph, sigma),
            delta=EdgeSubset.from_mask(graph, full ^ sigma),
            eta_count=eta,
            multiplicity=mult,
        )
        for sigma, eta, mult in rows
    )
    caveat = None
    if graph.gamma <= MAX_CANONICAL_VERTICES:
        caveat = has_nontrivial_automorphism(graph)
        if caveat:
            logger.debug("Graph has nontrivial automorphisms; fiber computed modulo inessential isomorphism only")

    report = FiberReport(
        graph=graph,
        records=records,
        component_count=sum(r.eta_count for r in records),
        length=sum(r.eta_count * r.multiplicity for r in records),
        L_prym=frozenset(r.multiplicity for r in records),
        L_spin=spin_multiplicity_set(graph, cap),
        g=gnu + b1,
        gnu=gnu,
        b1=b1,
        automorphism_caveat=caveat,
    )
    logger.debug(
        "Fiber over g=%d graph: %d models, %d components, length %d",
        report.g, len(records), report.component_count, report.length,
    )
    return report


def two_component_multiplicities(delta: int) -> frozenset[int]:
    """Closed form of L for two smooth components meeting in delta >= 2 points."""
    if delta < 2:
        raise ValueError(f"Two-component formula needs delta >= 2, got {delta}")
    return frozenset({1 << (2 * r) for r in range(delta // 2)} | {1 << (delta - 1)})


def prym_multiplicity_set(graph: DualGraph, cap: int = DEFAULT_CYCLE_CAP) -> frozenset[int]:
    """L(P_Z) alone, without building records."""
    _require_stable(graph)
    b1 = betti1(graph)
    full = (1 << graph.delta) - 1
    return frozenset(1 << (b1 - mask_betti1(graph, full ^ m)) for m in eulerian_masks(graph, cap))
