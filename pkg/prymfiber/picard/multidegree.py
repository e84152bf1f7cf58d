"""
Multidegrees of eta (x) omega^t on quasistable models, and the per-subcurve
quantities entering the Basic Inequality.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from prymfiber.errors import BadT, InputError, NotEulerian
from prymfiber.graph.core import QuasistableModel, exceptional_id
from prymfiber.graph.cycles import is_eulerian, odd_vertices

logger = logging.getLogger(__name__)

MIN_T = 10
DEFAULT_T = 10


@dataclass(frozen=True)
class Multidegree:
    model: QuasistableModel
    t: int
    degrees: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.degrees.values())

    @property
    def expected_total(self) -> int:
        """2t(g-1) = t * deg(omega)."""
        return 2 * self.t * (self.model.total_genus - 1)

    @cached_property
    def subcurves(self) -> SubcurveCalculator:
        return SubcurveCalculator(self.model)


def eta_degrees(model: QuasistableModel) -> dict[str, Fraction]:
    """deg eta: 1 on exceptional components, -m_v/2 on the others."""
    out: dict[str, Fraction] = {}
    for comp in model.components:
        if model.is_exceptional(comp):
            out[comp] = Fraction(1)
        else:
            out[comp] = Fraction(-model.blown_valency[comp], 2)
    return out


def canonical_degrees(model: QuasistableModel) -> dict[str, int]:
    """deg omega_X on each component: 2g_C - 2 + (branches meeting the rest)."""
    base = model.base
    out: dict[str, int] = {}
    for comp in model.components:
        if model.is_exceptional(comp):
            out[comp] = 0
        else:
            out[comp] = 2 * base.genus_of(comp) - 2 + base.valency(comp)
    return out


def prym_multidegree(model: QuasistableModel, t: int = DEFAULT_T) -> Multidegree:
    if t < MIN_T:
        raise BadT(f"t must be at least {MIN_T}, got {t}")
    if not is_eulerian(model.base, model.blown):
        raise NotEulerian(
            f"Model supports no Prym curve; odd blown valency at {', '.join(odd_vertices(model.base, model.blown))}"
        )
    eta = eta_degrees(model)
    omega = canonical_degrees(model)
    degrees = {}
    for comp in model.components:
        value = t * omega[comp] + eta[comp]
        assert value.denominator == 1
        degrees[comp] = int(value)
    md = Multidegree(model, t, degrees)
    if md.total != md.expected_total:
        raise AssertionError(f"multidegree total {md.total} != 2t(g-1) = {md.expected_total}")
    return md


class SubcurveCalculator:
    """Bitmask bookkeeping over the components of X for subcurve sums."""

    def __init__(self, model: QuasistableModel):
        self.model = model
        self.components = model.components
        self.bit = {comp: 1 << i for i, comp in enumerate(self.components)}
        self.exceptional_mask = sum(
            self.bit[c] for c in self.components if model.is_exceptional(c)
        )
        # (mask of one end, mask of the other end) for every edge of X
        self.edges = [(self.bit[a], self.bit[b]) for _, a, b in model.x_edges]
        self.genera = [model.component_genus(c) for c in self.components]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.components)) - 1

    def mask_of(self, subcurve: Iterable[str]) -> int:
        try:
            return sum(self.bit[c] for c in set(subcurve))
        except KeyError as e:
            raise InputError(f"Unknown component {e.args[0]}") from None

    def members(self, mask: int) -> frozenset[str]:
        return frozenset(c for c in self.components if mask & self.bit[c])

    def boundary(self, mask: int) -> int:
        """k_Y: nodes of X joining Y to its complement."""
        return sum(1 for a, b in self.edges if bool(a & mask) != bool(b & mask))

    def internal_edges(self, mask: int) -> int:
        return sum(1 for a, b in self.edges if a & mask and b & mask)

    def arithmetic_genus(self, mask: int) -> int:
        """g_Y = sum of genera + |E_Y| - |V_Y| + 1; additive minus one over connected pieces."""
        genera = sum(g for i, g in enumerate(self.genera) if mask >> i & 1)
        return genera + self.internal_edges(mask) - bin(mask).count("1") + 1

    def tilde_boundary(self, mask: int) -> int:
        """k~_Y: nodes joining non-exceptional parts of Y and of its complement."""
        exc = self.exceptional_mask
        return sum(
            1 for a, b in self.edges
            if not (a & exc) and not (b & exc) and bool(a & mask) != bool(b & mask)
        )


def eta_restriction_bounds(model: QuasistableModel, subcurve: Iterable[str]) -> tuple[Fraction, int]:
    """
    (e_Y, k_Y) by the exceptional-component bookkeeping: an exceptional E
    outside Y meeting Y in m points adds m to k_Y and -m/2 to e_Y; an E inside
    Y meeting the complement in l points adds l to k_Y and l/2 to e_Y; unblown
    nodes crossing the cut add to k_Y only. Asserts -k_Y/2 <= e_Y <= k_Y/2.
    """
    calc = SubcurveCalculator(model)
    mask = calc.mask_of(subcurve)
    base = model.base

    e_y = Fraction(0)
    k_y = 0
    for e in base.edges:
        u, v = e.ends
        in_u, in_v = bool(calc.bit[u] & mask), bool(calc.bit[v] & mask)
        if e.id not in model.blown:
            k_y += in_u != in_v
            continue
        attached_in = in_u + in_v
        if calc.bit[exceptional_id(e.id)] & mask:
            l = 2 - attached_in
            k_y += l
            e_y += Fraction(l, 2)
        else:
            k_y += attached_in
            e_y -= Fraction(attached_in, 2)

    if not -Fraction(k_y, 2) <= e_y <= Fraction(k_y, 2):
        raise AssertionError(f"eta bound violated on {sorted(calc.members(mask))}: e_Y={e_y}, k_Y={k_y}")
    return e_y, k_y
