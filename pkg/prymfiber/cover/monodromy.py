"""Enumeration of monodromy data over a fixed Prym support, and cover census."""
from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, Iterator

from prymfiber.cover.builder import CONNECTED, SPLIT, CoverGraph, MonodromyData, build_cover
from prymfiber.errors import CapExceeded, Disconnected
from prymfiber.fiber.prym import prym_classes_on
from prymfiber.graph.core import DualGraph, EdgeSubset, valency_profile
from prymfiber.search.canonical import canonical_form

logger = logging.getLogger(__name__)

DEFAULT_MONODROMY_CAP = 20


def _free_vertices(graph: DualGraph, blown: EdgeSubset) -> tuple[list[str], dict[str, str]]:
    """Vertices with a genuine split/connected choice, and the forced choices of the rest."""
    m = valency_profile(graph, blown)
    free: list[str] = []
    forced: dict[str, str] = {}
    for v in graph.vertices:
        if m[v.id] > 0:
            forced[v.id] = CONNECTED
        elif v.genus == 0:
            forced[v.id] = SPLIT
        else:
            free.append(v.id)
    return free, forced


def enumerate_covers(
    graph: DualGraph,
    blown: EdgeSubset,
    cap: int = DEFAULT_MONODROMY_CAP,
) -> Iterator[tuple[MonodromyData, CoverGraph]]:
    """
    Every monodromy datum over (Gamma, Sigma) giving a connected cover, with
    that cover. Twists are assigned only to unblown edges whose two ends are
    both split.
    """
    free, forced = _free_vertices(graph, blown)
    unblown = [e for e in graph.edges if e.id not in blown]
    bits = len(free) + len(unblown)
    if bits > cap:
        raise CapExceeded(f"{bits} free monodromy bits exceed the cap of {cap}")

    skipped = 0
    for choices in product((SPLIT, CONNECTED), repeat=len(free)):
        kinds = {**forced, **dict(zip(free, choices))}
        twistable = [e.id for e in unblown if kinds[e.ends[0]] == SPLIT and kinds[e.ends[1]] == SPLIT]
        for twists in product((0, 1), repeat=len(twistable)):
            mono = MonodromyData(
                split_choice={vid: kinds[vid] for vid in graph.vertex_ids if forced.get(vid) != CONNECTED},
                edge_twist=dict(zip(twistable, twists)),
            )
            try:
                cg = build_cover(graph, blown, mono)
            except Disconnected:
                skipped += 1
                continue
            yield mono, cg
    logger.debug("Skipped %d monodromy data giving disconnected covers", skipped)


def enumerate_monodromies(
    graph: DualGraph,
    blown: EdgeSubset,
    cap: int = DEFAULT_MONODROMY_CAP,
) -> Iterator[MonodromyData]:
    """The monodromy data of `enumerate_covers`, without the covers."""
    for mono, _ in enumerate_covers(graph, blown, cap):
        yield mono


def cover_census(graph: DualGraph, blown: EdgeSubset, covers: Iterable[CoverGraph]) -> dict[str, int]:
    """Census of covers already built over (Gamma, Sigma)."""
    data = 0
    types = set()
    for cg in covers:
        data += 1
        types.add(canonical_form(cg.cover))
    return {
        "monodromy_data": data,
        "cover_types": len(types),
        "eta_count": prym_classes_on(graph, blown),
    }


def monodromy_census(graph: DualGraph, blown: EdgeSubset, cap: int = DEFAULT_MONODROMY_CAP) -> dict[str, int]:
    """
    Monodromy data count, distinct cover graphs among them, and the eta count
    of the support. No relation between the numbers is asserted.
    """
    return cover_census(graph, blown, (cg for _, cg in enumerate_covers(graph, blown, cap)))
