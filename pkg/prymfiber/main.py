"""prymfiber command-line entry point."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from prymfiber.config.loader import load_config
from prymfiber.cover.builder import admissibility_diagnostics, build_cover, cover_genus
from prymfiber.cover.monodromy import cover_census, enumerate_covers
from prymfiber.errors import DomainError, HypothesisNotMet, InputError, SpaceTooLarge
from prymfiber.fiber.checks import check_combprop, check_corollary_cor, check_reducedness_bullet, is_etale_point
from prymfiber.fiber.prym import prym_fiber, spin_multiplicity_set
from prymfiber.graph.core import QuasistableModel, betti1
from prymfiber.formats import reports
from prymfiber.formats.dot import export_cover_dot, export_dot
from prymfiber.formats.graph_json import GraphDocument, dumps, dumps_line, load_document, sigma_from_ids
from prymfiber.picard.inequality import basic_inequality_check, closed_orbit_criterion
from prymfiber.picard.multidegree import prym_multidegree
from prymfiber.search.enumerate import SearchSpace, enumerate_graphs
from prymfiber.search.queries import find_L_collision, verify_corollary_over_space, verify_etale_over_space

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


def _setup_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML config path (default: $PRYM_CONFIG_PATH or config/config.yaml)")
    common.add_argument("--cap", type=int, help="cycle-space / monodromy enumeration cap (log2)")
    common.add_argument("--t", type=int, help="twisting exponent, >= 10")
    common.add_argument("--format", choices=("json", "dot"), help="output format")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return common


def _input_options() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", help="graph or document JSON file, '-' for stdin")
    source.add_argument("--json", dest="inline", help="inline graph or document JSON")
    source.add_argument("--sigma", help="comma-separated blown edge ids, overriding the document")
    return source


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prymfiber",
        description="Prym and spin fiber combinatorics over stable curves, from their dual graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common, source = _common_options(), _input_options()

    sub.add_parser("fiber", parents=[common, source], help="Prym fiber report")
    sub.add_parser("spin", parents=[common, source], help="spin multiplicity set")
    sub.add_parser("degrees", parents=[common, source], help="Prym multidegree and Basic Inequality certificates")
    sub.add_parser("cover", parents=[common, source], help="admissible double covers over (graph, sigma)")
    sub.add_parser("check", parents=[common, source], help="combinatorial property checks")
    sub.add_parser("export-dot", parents=[common, source], help="DOT rendering of the graph")

    search = sub.add_parser("search", parents=[common], help="exhaustive search over small graphs")
    search.add_argument("--mode", choices=("graphs", "collisions", "corollary", "etale"), default="graphs")
    search.add_argument("--max-vertices", type=int)
    search.add_argument("--max-edges", type=int)
    search.add_argument("--max-genus-per-vertex", type=int)
    search.add_argument("--min-genus", type=int)
    search.add_argument("--max-genus", type=int)
    return parser


def _load(args: argparse.Namespace) -> GraphDocument:
    if args.input is not None and args.inline is not None:
        raise InputError("Give either an input file or --json, not both")
    doc = load_document(args.input, args.inline)
    if args.sigma is not None:
        ids = [e.strip() for e in args.sigma.split(",") if e.strip()]
        doc = GraphDocument(doc.graph, sigma_from_ids(doc.graph, ids), doc.monodromy)
    return doc


def _json_only(fmt: str, command: str) -> None:
    if fmt != "json":
        raise InputError(f"'{command}' only supports --format json")


def _cmd_fiber(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    _json_only(fmt, "fiber")
    doc = _load(args)
    return dumps(reports.fiber_to_dict(prym_fiber(doc.graph, cap=config["enumeration"]["cycle_cap"])))


def _cmd_spin(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    _json_only(fmt, "spin")
    graph = _load(args).graph
    L_spin = spin_multiplicity_set(graph, cap=config["enumeration"]["cycle_cap"])
    b1 = betti1(graph)
    return dumps(reports.spin_to_dict(graph.gnu + b1, b1, L_spin))


def _cmd_degrees(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    _json_only(fmt, "degrees")
    doc = _load(args)
    md = prym_multidegree(QuasistableModel(doc.graph, doc.blown), t=config["picard"]["t"])
    certs = basic_inequality_check(md, max_components=config["enumeration"]["subcurve_cap"])
    return dumps(reports.degrees_to_dict(md, certs, closed_orbit_criterion(md, certs)))


def _cmd_cover(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    doc = _load(args)
    if doc.monodromy is not None:
        covers = [(doc.monodromy, build_cover(doc.graph, doc.blown, doc.monodromy))]
    else:
        covers = list(enumerate_covers(doc.graph, doc.blown, cap=config["enumeration"]["monodromy_cap"]))
    if fmt == "dot":
        return "".join(export_cover_dot(cg, name=f"C{i}") for i, (_, cg) in enumerate(covers))

    items = []
    for mono, cg in covers:
        problems = admissibility_diagnostics(cg)
        for problem in problems:
            logger.warning("Cover not admissible: %s", problem)
        items.append(reports.cover_to_dict(cg, mono, problems, cover_genus(cg)))
    out: dict[str, Any] = {"covers": items}
    if doc.monodromy is None:
        try:
            out["census"] = cover_census(doc.graph, doc.blown, (cg for _, cg in covers))
        except SpaceTooLarge as e:
            logger.warning("Census skipped: %s", e)
            out["census"] = None
    return dumps(out)


def _cmd_check(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    _json_only(fmt, "check")
    graph = _load(args).graph
    report = prym_fiber(graph, cap=config["enumeration"]["cycle_cap"])
    out = reports.combprop_to_dict(check_combprop(graph, report), check_reducedness_bullet(report))
    out["fiber_reduced"] = report.is_reduced
    out["etale_point"] = is_etale_point(graph)
    out["automorphism_caveat"] = report.automorphism_caveat
    try:
        out["corollary"] = reports.corollary_to_dict(check_corollary_cor(graph, report))
    except HypothesisNotMet as e:
        logger.info("Corollary checks skipped: %s", e)
        out["corollary"] = None
    return dumps(out)


def _cmd_export_dot(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    doc = _load(args)
    return export_dot(doc.graph, doc.sigma)


def _search_space(args: argparse.Namespace, config: dict[str, Any]) -> SearchSpace:
    bounds = dict(config["search"])
    for key in ("max_vertices", "max_edges", "max_genus_per_vertex", "min_genus", "max_genus"):
        value = getattr(args, key)
        if value is not None:
            bounds[key] = value
    return SearchSpace(
        max_vertices=bounds["max_vertices"],
        max_edges=bounds["max_edges"],
        max_genus_per_vertex=bounds["max_genus_per_vertex"],
        min_genus=bounds["min_genus"],
        max_genus=bounds["max_genus"],
        candidate_limit=bounds["candidate_limit"],
    )


def _cmd_search(args: argparse.Namespace, config: dict[str, Any], fmt: str) -> str:
    _json_only(fmt, "search")
    space = _search_space(args, config)
    cap = config["enumeration"]["cycle_cap"]
    if args.mode == "graphs":
        lines = [reports.search_graph_line(g) for g in enumerate_graphs(space)]
    elif args.mode == "collisions":
        lines = [reports.collision_line(hit) for hit in find_L_collision(space, cap)]
    elif args.mode == "corollary":
        lines = reports.corollary_sweep_lines(verify_corollary_over_space(space, cap))
    else:
        lines = reports.etale_sweep_lines(verify_etale_over_space(space, cap))
    return "".join(dumps_line(line) for line in lines)


COMMANDS: dict[str, Callable[[argparse.Namespace, dict[str, Any], str], str]] = {
    "fiber": _cmd_fiber,
    "spin": _cmd_spin,
    "degrees": _cmd_degrees,
    "cover": _cmd_cover,
    "check": _cmd_check,
    "export-dot": _cmd_export_dot,
    "search": _cmd_search,
}


def _apply_flags(args: argparse.Namespace, config: dict[str, Any]) -> None:
    if args.cap is not None:
        config["enumeration"]["cycle_cap"] = args.cap
        config["enumeration"]["monodromy_cap"] = args.cap
    if args.t is not None:
        config["picard"]["t"] = args.t


def run(argv: list[str] | None = None) -> int:
    """Run one subcommand; returns the process exit status."""
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)

    try:
        config = load_config(args.config)
        _apply_flags(args, config)
        fmt = args.format or config["output"]["format"]
        if args.command == "export-dot":
            fmt = "dot"
        output = COMMANDS[args.command](args, config, fmt)
        if args.out:
            Path(args.out).write_text(output, encoding="utf-8")
            logger.info("Wrote %s", args.out)
        else:
            sys.stdout.write(output)
    except DomainError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_DOMAIN
    except (InputError, OSError, ValueError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
