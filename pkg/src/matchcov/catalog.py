"""Catalog of named graphs with fixed labelings.

Labelings are pinned here and documented in each entry's provenance note;
structural identities (e.g. F2 being the 6-wheel) are asserted by tests up to
isomorphism, never by labels.
"""

from dataclasses import dataclass

from .errors import CatalogError
from .graph import Graph, build


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    provenance: str


def _k4():
    return build(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def _c6bar():
    # triangular prism: triangles {0,1,2} and {3,4,5}, rungs i-(i+3)
    return build(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                     (0, 3), (1, 4), (2, 5)])


def _c6bar_plus():
    g = _c6bar()
    return build(6, list(g.edges) + [(0, 4)])


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build(10, outer + inner + spokes)


_R8_EDGES = [(0, 1), (0, 4), (0, 7), (1, 5), (1, 6), (2, 3),
             (2, 4), (2, 5), (3, 6), (3, 7), (4, 5), (6, 7)]


def _r8():
    return build(8, _R8_EDGES)


def _w6():
    rim = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(0, i) for i in range(1, 6)]
    return build(6, spokes + rim)


def _w6_plus():
    g = _w6()
    return build(6, list(g.edges) + [(1, 3)])


def _w6_plusplus():
    # two hubs 0,1 joined to each other and to the path 2-3-4-5
    hubs = [(0, 1)]
    joins = [(h, v) for h in (0, 1) for v in (2, 3, 4, 5)]
    path = [(2, 3), (3, 4), (4, 5)]
    return build(6, hubs + joins + path)


def _f1():
    return build(6, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2),
                     (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)])


def _f2():
    return build(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                     (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)])


def _f3():
    return build(8, _R8_EDGES + [(0, 5), (1, 7)])


def _f4():
    return build(8, _R8_EDGES + [(0, 6), (1, 7)])


def _k33():
    return build(6, [(i, j) for i in range(3) for j in range(3, 6)])


_ENTRIES = {
    "K4": (_k4, "complete graph on 4 vertices"),
    "C6BAR": (_c6bar, "triangular prism (complement of the 6-cycle)"),
    "C6BAR_PLUS": (_c6bar_plus, "prism plus the chord 0-4; prism non-edges are "
                                "automorphism-equivalent, so the choice is unique up to isomorphism"),
    "PETERSEN": (_petersen, "outer 5-cycle, inner pentagram 5-7-9-6-8, spokes i-(i+5)"),
    "R8": (_r8, "cubic 8-vertex brick with exactly two triangles; labeling read off "
                "as F3 minus the edges 0-5 and 1-7"),
    "W6": (_w6, "wheel: hub 0, rim 5-cycle 1..5"),
    "W6_PLUS": (_w6_plus, "wheel plus the rim chord 1-3; all distance-2 rim chords are equivalent"),
    "W6_PLUSPLUS": (_w6_plusplus, "join of the edge 0-1 with the path 2-3-4-5"),
    "F1": (_f1, "6-vertex spanning-subgraph fixture; isomorphic to C6BAR_PLUS"),
    "F2": (_f2, "6-vertex spanning-subgraph fixture; identical in structure to W6"),
    "F3": (_f3, "R8 plus the edges 0-5 and 1-7"),
    "F4": (_f4, "R8 plus the edges 0-6 and 1-7"),
    "K33": (_k33, "complete bipartite graph with parts {0,1,2} and {3,4,5}"),
}

FAMILY_G = ("C6BAR_PLUS", "W6", "W6_PLUS", "W6_PLUSPLUS")


def names():
    return tuple(_ENTRIES)


def entry(name):
    key = name.strip().upper()
    if key not in _ENTRIES:
        raise CatalogError(f"unknown catalog name {name!r}; valid names: {', '.join(_ENTRIES)}")
    builder, note = _ENTRIES[key]
    return CatalogEntry(key, builder(), note)


def catalog(name):
    """Named graph lookup, case-insensitive."""
    return entry(name).graph
