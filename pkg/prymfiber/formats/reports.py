"""JSON report documents. Counts are decimal strings, rationals "p/q"."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from prymfiber.cover.builder import CoverGraph, MonodromyData
from prymfiber.fiber.checks import CombpropReport, CorollaryReport
from prymfiber.fiber.prym import FiberReport
from prymfiber.graph.core import DualGraph
from prymfiber.formats.graph_json import graph_to_dict
from prymfiber.picard.inequality import SubcurveCertificate
from prymfiber.picard.multidegree import Multidegree
from prymfiber.search.canonical import canonical_form
from prymfiber.search.queries import CorollarySweep, EtaleSweep, LCollision


def fraction_str(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fiber_to_dict(report: FiberReport) -> dict[str, Any]:
    return {
        "g": report.g,
        "gnu": report.gnu,
        "b1": report.b1,
        "records": [
            {
                "sigma": list(r.blown),
                "eta_count": str(r.eta_count),
                "multiplicity": str(r.multiplicity),
            }
            for r in report.records
        ],
        "L_prym": sorted(report.L_prym),
        "L_spin": sorted(report.L_spin),
        "length": str(report.length),
        "component_count": str(report.component_count),
        "plus_length": str(report.plus_length),
        "plus_component_count": str(report.plus_component_count),
        "automorphism_caveat": report.automorphism_caveat,
    }


def spin_to_dict(g: int, b1: int, L_spin: frozenset[int]) -> dict[str, Any]:
    return {"g": g, "b1": b1, "L_spin": sorted(L_spin), "contains_one": 1 in L_spin}


def certificate_to_dict(cert: SubcurveCertificate) -> dict[str, Any]:
    return {
        "subcurve": sorted(cert.subcurve),
        "d_Y": cert.d_Y,
        "k_Y": cert.k_Y,
        "g_Y": cert.g_Y,
        "m_Y": fraction_str(cert.m_Y),
        "slack_low": fraction_str(cert.slack_low),
        "slack_high": fraction_str(cert.slack_high),
        "ktilde_Y": cert.ktilde_Y,
        "holds": cert.holds,
    }


def degrees_to_dict(md: Multidegree, certs: list[SubcurveCertificate], closed_orbit: bool) -> dict[str, Any]:
    return {
        "sigma": list(md.model.blown),
        "t": md.t,
        "d": md.total,
        "degrees": {c: md.degrees[c] for c in md.model.components},
        "certificates": [certificate_to_dict(c) for c in certs],
        "basic_inequality": all(c.holds for c in certs),
        "closed_orbit": closed_orbit,
    }


def monodromy_to_dict(mono: MonodromyData) -> dict[str, Any]:
    return {"split": dict(mono.split_choice), "twist": dict(mono.edge_twist)}


def cover_to_dict(cg: CoverGraph, mono: MonodromyData, problems: list[str], genus: int) -> dict[str, Any]:
    return {
        "sigma": list(cg.blown),
        "monodromy": monodromy_to_dict(mono),
        "cover": graph_to_dict(cg.cover),
        "genus": genus,
        "vertex_involution": dict(cg.vertex_involution),
        "edge_involution": {e: {"image": img, "reversed": rev} for e, (img, rev) in cg.edge_involution.items()},
        "vertex_projection": dict(cg.vertex_projection),
        "edge_projection": dict(cg.edge_projection),
        "fixed_edges": sorted(cg.fixed_edges),
        "admissible": not problems,
        "problems": problems,
    }


def combprop_to_dict(result: CombpropReport, bullet: list[bool]) -> dict[str, Any]:
    return {
        "properties": [{"name": p.name, "passed": p.passed, "witness": p.witness} for p in result.properties],
        "all_passed": result.all_passed,
        "spin_contains_one": result.spin_contains_one,
        "reducedness_per_record": bullet,
    }


def corollary_to_dict(result: CorollaryReport) -> dict[str, Any]:
    return {
        "b1": result.b1,
        "premise_i": result.premise_i,
        "conclusion_i": result.conclusion_i,
        "premise_ii": result.premise_ii,
        "conclusion_ii": result.conclusion_ii,
        "holds": result.holds,
    }


def search_graph_line(graph: DualGraph) -> dict[str, Any]:
    return {"canonical": str(canonical_form(graph)), "graph": graph_to_dict(graph)}


def collision_line(hit: LCollision) -> dict[str, Any]:
    return {
        "first": graph_to_dict(hit.first),
        "second": graph_to_dict(hit.second),
        "L_prym": sorted(hit.L_prym),
        "first_L_spin": sorted(hit.first_spin),
        "second_L_spin": sorted(hit.second_spin),
    }


def corollary_sweep_lines(sweep: CorollarySweep) -> list[dict[str, Any]]:
    lines = [
        {"counterexample": graph_to_dict(graph), "report": corollary_to_dict(result)}
        for graph, result in sweep.counterexamples
    ]
    lines.append({"summary": {
        "checked": sweep.checked,
        "premise_i": sweep.premise_i,
        "premise_ii": sweep.premise_ii,
        "counterexamples": len(sweep.counterexamples),
    }})
    return lines


def etale_sweep_lines(sweep: EtaleSweep) -> list[dict[str, Any]]:
    lines = [{"violation": graph_to_dict(graph)} for graph in sweep.violations]
    lines.append({"summary": {"checked": sweep.checked, "reduced": sweep.reduced, "violations": len(sweep.violations)}})
    return lines
