"""DOT export for dual graphs and double covers."""
from __future__ import annotations

from prymfiber.cover.builder import CoverGraph
from prymfiber.graph.core import DualGraph, EdgeSubset

ORBIT_COLORS = (
    "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta",
    "gold", "gray40", "navy", "olive",
)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(**attrs: str) -> str:
    return "[" + ", ".join(f"{k}={_quote(v)}" for k, v in attrs.items()) + "]"


def export_dot(graph: DualGraph, sigma: EdgeSubset | None = None, name: str = "Z") -> str:
    """Vertices labelled id:genus; edges in sigma drawn dashed."""
    blown = sigma.members if sigma is not None else frozenset()
    lines = [f"graph {_quote(name)} {{"]
    for v in graph.vertices:
        lines.append(f"  {_quote(v.id)} {_attrs(label=f'{v.id}:{v.genus}')};")
    for e in graph.edges:
        u, w = e.ends
        attrs = {"label": e.id}
        if e.id in blown:
            attrs["style"] = "dashed"
        lines.append(f"  {_quote(u)} -- {_quote(w)} {_attrs(**attrs)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_cover_dot(cg: CoverGraph, name: str = "C") -> str:
    """Involution orbits share a color; fixed edges are bold and labelled as fixed."""
    colors: dict[str, str] = {}

    def orbit_color(item: str, image: str) -> str:
        key = min(item, image)
        if key not in colors:
            colors[key] = ORBIT_COLORS[len(colors) % len(ORBIT_COLORS)]
        return colors[key]

    lines = [f"graph {_quote(name)} {{"]
    for v in cg.cover.vertices:
        color = orbit_color(v.id, cg.vertex_involution[v.id])
        lines.append(f"  {_quote(v.id)} {_attrs(label=f'{v.id}:{v.genus}', color=color)};")
    for e in cg.cover.edges:
        u, w = e.ends
        if e.id in cg.fixed_edges:
            attrs = {"label": f"{e.id} (fixed)", "style": "bold"}
        else:
            attrs = {"label": e.id, "color": orbit_color(e.id, cg.edge_involution[e.id][0])}
        lines.append(f"  {_quote(u)} -- {_quote(w)} {_attrs(**attrs)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
