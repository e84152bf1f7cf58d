"""Graph JSON schema and input documents.

A graph is {"vertices": [{"id", "genus"}], "edges": [{"id", "ends": [u, v]}]}.
A document is either a bare graph or {"graph", "sigma", "monodromy"} where
monodromy is {"split": {vertex: "split"|"connected"}, "twist": {edge: 0|1}}.
"""
from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from prymfiber.cover.builder import CONNECTED, SPLIT, MonodromyData
from prymfiber.errors import InputError
from prymfiber.graph.core import DualGraph, EdgeSubset

logger = logging.getLogger(__name__)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


def graph_to_dict(graph: DualGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": v.id, "genus": v.genus} for v in graph.vertices],
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in graph.edges],
    }


def graph_from_dict(data: Any, validate: bool = True) -> DualGraph:
    _require(isinstance(data, dict), "Graph must be a JSON object")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    _require(isinstance(vertices, list), "Graph needs a 'vertices' list")
    _require(isinstance(edges, list), "Graph 'edges' must be a list")

    parsed_vertices = []
    for i, v in enumerate(vertices):
        _require(isinstance(v, dict) and "id" in v and "genus" in v, f"vertices[{i}] needs 'id' and 'genus'")
        _require(isinstance(v["id"], str), f"vertices[{i}].id must be a string")
        parsed_vertices.append((v["id"], v["genus"]))

    parsed_edges = []
    for i, e in enumerate(edges):
        _require(isinstance(e, dict) and "id" in e and "ends" in e, f"edges[{i}] needs 'id' and 'ends'")
        _require(isinstance(e["id"], str), f"edges[{i}].id must be a string")
        ends = e["ends"]
        _require(isinstance(ends, list) and len(ends) == 2, f"Edge {e['id']} must have exactly two ends")
        _require(all(isinstance(x, str) for x in ends), f"Edge {e['id']} ends must be vertex id strings")
        parsed_edges.append((e["id"], ends[0], ends[1]))

    return DualGraph.build(parsed_vertices, parsed_edges, validate=validate)


def sigma_from_ids(graph: DualGraph, edge_ids: list[str]) -> EdgeSubset:
    unknown = [e for e in edge_ids if e not in graph.edge_index]
    _require(not unknown, f"Sigma names unknown edges: {unknown}")
    return graph.subset(edge_ids)


def _monodromy_from_dict(data: Any) -> MonodromyData:
    _require(isinstance(data, dict), "'monodromy' must be an object")
    split = data.get("split", {})
    twist = data.get("twist", {})
    _require(isinstance(split, dict), "'monodromy.split' must be an object")
    _require(isinstance(twist, dict), "'monodromy.twist' must be an object")
    for vid, kind in split.items():
        _require(kind in (SPLIT, CONNECTED), f"Vertex {vid}: split choice must be '{SPLIT}' or '{CONNECTED}'")
    for eid, bit in twist.items():
        _require(isinstance(bit, int) and not isinstance(bit, bool), f"Edge {eid}: twist must be 0 or 1")
    return MonodromyData(split_choice=dict(split), edge_twist=dict(twist))


@dataclass(frozen=True)
class GraphDocument:
    graph: DualGraph
    sigma: EdgeSubset | None = None
    monodromy: MonodromyData | None = None

    @property
    def blown(self) -> EdgeSubset:
        return self.sigma if self.sigma is not None else self.graph.empty_subset()


def document_from_dict(data: Any) -> GraphDocument:
    _require(isinstance(data, dict), "Input must be a JSON object")
    if "graph" not in data:
        return GraphDocument(graph_from_dict(data))

    graph = graph_from_dict(data["graph"])
    sigma = None
    if data.get("sigma") is not None:
        _require(isinstance(data["sigma"], list), "'sigma' must be a list of edge ids")
        _require(all(isinstance(x, str) for x in data["sigma"]), "'sigma' entries must be edge id strings")
        sigma = sigma_from_ids(graph, data["sigma"])
    monodromy = None
    if data.get("monodromy") is not None:
        monodromy = _monodromy_from_dict(data["monodromy"])
    return GraphDocument(graph, sigma, monodromy)


def document_to_dict(doc: GraphDocument) -> dict[str, Any]:
    out: dict[str, Any] = {"graph": graph_to_dict(doc.graph)}
    if doc.sigma is not None:
        out["sigma"] = list(doc.sigma)
    if doc.monodromy is not None:
        out["monodromy"] = {"split": dict(doc.monodromy.split_choice), "twist": dict(doc.monodromy.edge_twist)}
    return out


def read_input(path: str | None = None, inline: str | None = None) -> Any:
    """Parse JSON from an inline string, stdin ('-') or a file."""
    if inline is not None:
        text, origin = inline, "--json"
    elif path is None or path == "-":
        text, origin = sys.stdin.read(), "stdin"
    else:
        text, origin = Path(path).read_text(encoding="utf-8"), path
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {origin}: {e}") from e


def load_document(path: str | None = None, inline: str | None = None) -> GraphDocument:
    doc = document_from_dict(read_input(path, inline))
    logger.debug("Loaded graph with %d vertices and %d edges", doc.graph.gamma, doc.graph.delta)
    return doc


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def dumps_line(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
