"""Property-driven sweeps over an enumerated space of dual graphs."""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from prymfiber.fiber.checks import CorollaryReport, check_corollary_cor, is_etale_point
from prymfiber.fiber.prym import prym_multiplicity_set, spin_multiplicity_set
from prymfiber.graph.core import DualGraph
from prymfiber.graph.cycles import DEFAULT_CYCLE_CAP
from prymfiber.search.canonical import canonical_form
from prymfiber.search.enumerate import SearchSpace, enumerate_graphs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LCollision:
    first: DualGraph = field(repr=False)
    second: DualGraph = field(repr=False)
    L_prym: frozenset[int]
    first_spin: frozenset[int]
    second_spin: frozenset[int]


def find_L_collision(space: SearchSpace, cap: int = DEFAULT_CYCLE_CAP) -> list[LCollision]:
    """
    Non-isomorphic pairs sharing L(P_Z) but not L(S_Z). Pairs are ordered by
    enumeration order; within a pair the earlier graph comes first.
    """
    groups: dict[frozenset[int], list[tuple[DualGraph, frozenset[int]]]] = defaultdict(list)
    order: list[frozenset[int]] = []
    checked = 0
    for graph in enumerate_graphs(space):
        checked += 1
        L = prym_multiplicity_set(graph, cap)
        if L not in groups:
            order.append(L)
        groups[L].append((graph, spin_multiplicity_set(graph, cap)))

    hits: list[LCollision] = []
    for L in order:
        members = groups[L]
        for i, (first, first_spin) in enumerate(members):
            for second, second_spin in members[i + 1:]:
                if first_spin != second_spin:
                    hits.append(LCollision(first, second, L, first_spin, second_spin))
    logger.info("Collision search: %d graphs, %d L-classes, %d pairs", checked, len(groups), len(hits))
    return hits


@dataclass
class CorollarySweep:
    checked: int = 0
    premise_i: int = 0
    premise_ii: int = 0
    counterexamples: list[tuple[DualGraph, CorollaryReport]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def verify_corollary_over_space(space: SearchSpace, cap: int = DEFAULT_CYCLE_CAP) -> CorollarySweep:
    """Restricts the space to even valencies >= 4 and checks both implications on every graph."""
    sweep = CorollarySweep()
    for graph in enumerate_graphs(space.with_predicates("even_valency_ge4")):
        result = check_corollary_cor(graph, cap=cap)
        sweep.checked += 1
        sweep.premise_i += result.premise_i
        sweep.premise_ii += result.premise_ii
        if not result.holds:
            sweep.counterexamples.append((graph, result))
    logger.info(
        "Corollary sweep: %d graphs, premise (i) on %d, premise (ii) on %d, %d counterexamples",
        sweep.checked, sweep.premise_i, sweep.premise_ii, len(sweep.counterexamples),
    )
    return sweep


@dataclass
class EtaleSweep:
    checked: int = 0
    reduced: int = 0
    violations: list[DualGraph] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def verify_etale_over_space(space: SearchSpace, cap: int = DEFAULT_CYCLE_CAP) -> EtaleSweep:
    """L(P_Z) = {1} exactly on compact type, over every graph in the space."""
    sweep = EtaleSweep()
    for graph in enumerate_graphs(space):
        sweep.checked += 1
        reduced = prym_multiplicity_set(graph, cap) == frozenset({1})
        sweep.reduced += reduced
        if reduced != is_etale_point(graph):
            logger.error("Reduced fiber mismatch on %s", canonical_form(graph))
            sweep.violations.append(graph)
    logger.info("Etale sweep: %d graphs, %d reduced, %d violations",
                sweep.checked, sweep.reduced, len(sweep.violations))
    return sweep
