"""Checks of the combinatorial properties of L(P_Z) against a computed fiber."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from prymfiber.errors import HypothesisNotMet
from prymfiber.fiber.prym import FiberReport, prym_fiber
from prymfiber.graph.core import DualGraph, betti1
from prymfiber.graph.cycles import DEFAULT_CYCLE_CAP, is_eulerian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CombpropReport:
    properties: tuple[CheckResult, ...]
    spin_contains_one: bool

    @property
    def all_passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def failures(self) -> list[CheckResult]:
        return [p for p in self.properties if not p.passed]


def check_combprop(graph: DualGraph, report: FiberReport | None = None, cap: int = DEFAULT_CYCLE_CAP) -> CombpropReport:
    """
    Evaluate the five properties of L(P_Z) on the computed fiber. Each is a
    theorem, so any failure is an implementation bug.
    """
    report = report or prym_fiber(graph, cap)
    L = report.L_prym
    b1 = report.b1

    trivial = report.trivial_record
    one = CheckResult(
        "1_in_L",
        1 in L and not trivial.blown.members and trivial.multiplicity == 1,
        {"sigma": list(trivial.blown), "multiplicity": trivial.multiplicity},
    )

    top = max(report.records, key=lambda r: r.multiplicity)
    maximum = CheckResult(
        "max_L_is_2^b1",
        max(L) == 1 << b1,
        {"max": max(L), "expected": 1 << b1, "sigma": list(top.blown)},
    )

    all_rational = all(v.genus == 0 for v in graph.vertices)
    rational = CheckResult(
        "2^g_in_L_iff_rational",
        ((1 << report.g) in L) == all_rational,
        {"2^g_in_L": (1 << report.g) in L, "all_rational": all_rational},
    )

    reduced = CheckResult(
        "reduced_iff_compact_type",
        report.is_reduced == (b1 == 0),
        {"reduced": report.is_reduced, "compact_type": b1 == 0},
    )

    eulerian = is_eulerian(graph, graph.full_subset())
    spin = CheckResult(
        "eulerian_implies_L_prym_eq_L_spin",
        not eulerian or L == report.L_spin,
        {"eulerian": eulerian, "L_prym": sorted(L), "L_spin": sorted(report.L_spin)},
    )

    result = CombpropReport((one, maximum, rational, reduced, spin), 1 in report.L_spin)
    for failure in result.failures():
        logger.error("Property %s violated: %s", failure.name, failure.witness)
    return result


def check_reducedness_bullet(report: FiberReport) -> list[bool]:
    """Per record: non-reduced (multiplicity > 1) exactly when X is not stable (Sigma nonempty)."""
    return [(r.multiplicity > 1) == bool(r.blown.members) for r in report.records]


def is_etale_point(graph: DualGraph) -> bool:
    """The fiber is reduced iff the dual graph is a tree."""
    return betti1(graph) == 0


@dataclass(frozen=True)
class CorollaryReport:
    b1: int
    premise_i: bool
    conclusion_i: bool
    premise_ii: bool
    conclusion_ii: bool

    @property
    def holds(self) -> bool:
        return (not self.premise_i or self.conclusion_i) and (not self.premise_ii or self.conclusion_ii)


def check_corollary_hypothesis(graph: DualGraph) -> None:
    for vid, valency in graph.valencies.items():
        if valency % 2 or valency < 4:
            raise HypothesisNotMet(f"Vertex {vid} has valency {valency}; need even and at least 4")


def _is_two_smooth_components(graph: DualGraph) -> bool:
    return graph.gamma == 2 and not graph.has_loops


def _is_irreducible_two_nodes(graph: DualGraph) -> bool:
    return graph.gamma == 1 and graph.delta == 2


def _is_double_triangle(graph: DualGraph) -> bool:
    if graph.gamma != 3 or graph.has_loops:
        return False
    ends = [frozenset(e.ends) for e in graph.edges]
    return all(ends.count(frozenset(pair)) == 2 for pair in combinations(graph.vertex_ids, 2)) and graph.delta == 6


def check_corollary_cor(graph: DualGraph, report: FiberReport | None = None, cap: int = DEFAULT_CYCLE_CAP) -> CorollaryReport:
    """
    When every component meets the rest in an even number >= 4 of branches:
    2^(b1-2) missing from L forces two smooth components; 2^(b1-3) missing
    forces an irreducible curve with two nodes or three smooth components
    pairwise meeting twice.
    """
    check_corollary_hypothesis(graph)
    report = report or prym_fiber(graph, cap)
    exponents = set(report.prym_exponents)
    b1 = report.b1

    result = CorollaryReport(
        b1=b1,
        premise_i=(b1 - 2) not in exponents,
        conclusion_i=_is_two_smooth_components(graph),
        premise_ii=(b1 - 3) not in exponents,
        conclusion_ii=_is_irreducible_two_nodes(graph) or _is_double_triangle(graph),
    )
    if not result.holds:
        logger.error("Corollary counterexample: %s", result)
    return result
