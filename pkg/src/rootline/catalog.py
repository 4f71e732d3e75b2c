"""Forbidden-subgraph catalogs, regenerated rather than transcribed.

The core list is the mutation-equivalence class of the six-vertex fork
(path of five with a branch at the middle): its members are exactly the
minimal connected graphs that are not line graphs of any multigraph.  The
smaller hand-encoded pieces are the three classical non-line-graph seeds
(claw and two five-vertex graphs) and the eleven generalized-line-graph
seeds, each produced as the line graph of its root multigraph.  Derived
lists: the full ordinary-line-graph obstruction list (3 + 6 members) and
the generalized-line-graph obstruction list (11 + 20 members).

Every build re-derives the class and checks it byte-for-byte against the
frozen snapshot shipped with the package; any drift is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Optional

from .embedding import twin_classes, universal_embedding
from .f2core import anisotropic_count, classify_type, isotropic_radical, radical_of_f
from .graphkit import (
    CanonicalForm,
    MultiGraph,
    SimpleGraph,
    canonical,
    contains_induced,
    emit_graph6,
    line_graph,
    named_graph,
    parse_graph6,
)
from .mutation import class_members

E6_CLASS_SIZE = 32
ORDINARY_OBSTRUCTION_SIZE = 9
GENERALIZED_OBSTRUCTION_SIZE = 31


class CatalogError(RuntimeError):
    """The regenerated catalog violates a load-bearing invariant."""


def _claw() -> SimpleGraph:
    return named_graph("Star", 4)


def _k5_minus_matching_and_path() -> SimpleGraph:
    # complement of {01, 23, 34} on five vertices
    missing = {(0, 1), (2, 3), (3, 4)}
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) not in missing]
    return SimpleGraph.from_edges(5, edges)


def _k5_minus_edge() -> SimpleGraph:
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (3, 4)]
    return SimpleGraph.from_edges(5, edges)


def h_seed_graphs() -> tuple[SimpleGraph, ...]:
    """The three non-line-graph seeds on at most five vertices."""
    return (_claw(), _k5_minus_matching_and_path(), _k5_minus_edge())


def g_seed_roots() -> tuple[MultiGraph, ...]:
    """Root multigraphs whose line graphs are the eleven generalized-line-graph
    obstruction seeds (doubled and tripled edges written as multiplicities)."""
    return (
        MultiGraph(5, ((0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 1))),
        MultiGraph(4, ((0, 1, 1), (1, 2, 3), (2, 3, 1))),
        MultiGraph(5, ((0, 1, 1), (1, 2, 2), (1, 4, 1), (2, 3, 1))),
        MultiGraph(5, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 3))),
        MultiGraph(3, ((0, 1, 1), (1, 2, 5))),
        MultiGraph(5, ((0, 1, 1), (1, 2, 1), (1, 4, 1), (2, 3, 3))),
        MultiGraph(5, ((0, 1, 1), (0, 4, 2), (1, 2, 1), (1, 4, 1), (2, 3, 1))),
        MultiGraph(5, ((0, 1, 3), (1, 2, 1), (1, 4, 1), (2, 3, 1))),
        MultiGraph(3, ((0, 1, 1), (0, 2, 4), (1, 2, 1))),
        MultiGraph(5, ((0, 1, 1), (0, 4, 2), (1, 2, 1), (1, 3, 1), (1, 4, 1))),
        MultiGraph(5, ((0, 1, 3), (1, 2, 1), (1, 3, 1), (1, 4, 1))),
    )


def g_seed_graphs() -> tuple[SimpleGraph, ...]:
    return tuple(line_graph(root)[0] for root in g_seed_roots())


@dataclass(frozen=True)
class Catalog:
    """Frozen, canonically labeled obstruction lists with stable indices."""

    e6_class: tuple[SimpleGraph, ...]
    h_list: tuple[SimpleGraph, ...]
    g_list: tuple[SimpleGraph, ...]
    beineke: tuple[SimpleGraph, ...]
    glg: tuple[SimpleGraph, ...]

    def index_of(self, g: SimpleGraph) -> Optional[int]:
        return _index_map(self.e6_class).get(canonical(g))

    def member_forms(self) -> frozenset[CanonicalForm]:
        return frozenset(_index_map(self.e6_class))


def _index_map(members: tuple[SimpleGraph, ...]) -> dict[CanonicalForm, int]:
    return {canonical(g): i for i, g in enumerate(members)}


def chordless_cycles(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex sets of chordless cycles (induced subgraph connected and
    2-regular); fine at catalog size."""
    out = []
    for size in range(3, g.n + 1):
        for combo in combinations(range(g.n), size):
            sub = g.induced(combo)
            if sub.is_connected() and all(sub.degree(v) == 2 for v in range(size)):
                out.append(combo)
    return out


def _cycle_has_odd_attachment(g: SimpleGraph, cycle: tuple[int, ...]) -> bool:
    mask = 0
    for v in cycle:
        mask |= 1 << v
    return any((g.adj[x] & mask).bit_count() % 2 == 1 for x in range(g.n))


def _diamond() -> SimpleGraph:
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _validate_class(members: tuple[SimpleGraph, ...]) -> None:
    if len(members) != E6_CLASS_SIZE:
        raise CatalogError(f"regenerated class has {len(members)} members, expected {E6_CLASS_SIZE}")
    trees = 0
    claw = _claw()
    diamond = _diamond()
    for g in members:
        if g.n != 6 or not g.is_connected():
            raise CatalogError("class member is not a connected six-vertex graph")
        eg = universal_embedding(g)
        if radical_of_f(eg.space).dim != 0 or isotropic_radical(eg.space).dim != 0:
            raise CatalogError("class member's coordinate space is degenerate")
        if classify_type(eg.space).sign != "minus":
            raise CatalogError("class member's coordinate space is not minus type")
        if anisotropic_count(eg.space) != 36:
            raise CatalogError("class member's space does not carry 36 anisotropic vectors")
        if any(len(cls) > 1 for cls in twin_classes(g)):
            raise CatalogError("class member has non-adjacent twins")
        for cycle in chordless_cycles(g):
            if not _cycle_has_odd_attachment(g, cycle):
                raise CatalogError("class member has a chordless cycle with all-even attachment")
        if contains_induced(g, claw) is None and contains_induced(g, diamond) is None:
            raise CatalogError("class member contains neither an induced claw nor a diamond")
        if g.edge_count() == 5:
            trees += 1
    if trees != 1:
        raise CatalogError(f"class contains {trees} trees, expected exactly the fork")


def _derive(members, seeds):
    extra = [g for g in members if all(contains_induced(g, s) is None for s in seeds)]
    return tuple(seeds) + tuple(extra)


_SNAPSHOT_FILES = {
    "e6": "e6.g6",
    "h": "h.g6",
    "g": "g.g6",
    "beineke": "beineke.g6",
    "glg": "glg.g6",
}


def _snapshot_text(name: str) -> Optional[str]:
    try:
        path = resources.files("rootline.data").joinpath(_SNAPSHOT_FILES[name])
        return path.read_text(encoding="ascii")
    except (FileNotFoundError, ModuleNotFoundError):
        return None


def snapshot_lines(graphs: tuple[SimpleGraph, ...]) -> str:
    return "\n".join(sorted(emit_graph6(canonical(g).to_graph()) for g in graphs)) + "\n"


def build_catalog(verify_snapshot: bool = True) -> Catalog:
    """Regenerate all lists, enforce the load-bearing invariants, and check
    the result byte-for-byte against the frozen snapshot."""
    members = tuple(class_members(named_graph("E", 6)))
    _validate_class(members)
    h_list = h_seed_graphs()
    g_list = g_seed_graphs()
    beineke = _derive(members, h_list)
    glg = _derive(members, g_list)
    if len(beineke) != ORDINARY_OBSTRUCTION_SIZE:
        raise CatalogError(
            f"ordinary obstruction list has {len(beineke)} members, expected {ORDINARY_OBSTRUCTION_SIZE}"
        )
    if len(glg) != GENERALIZED_OBSTRUCTION_SIZE:
        raise CatalogError(
            f"generalized obstruction list has {len(glg)} members, expected {GENERALIZED_OBSTRUCTION_SIZE}"
        )
    cat = Catalog(members, h_list, g_list, beineke, glg)
    if verify_snapshot:
        for name, graphs in (
            ("e6", cat.e6_class),
            ("h", cat.h_list),
            ("g", cat.g_list),
            ("beineke", cat.beineke),
            ("glg", cat.glg),
        ):
            frozen = _snapshot_text(name)
            if frozen is None:
                raise CatalogError(f"frozen snapshot {name!r} is missing from the package data")
            if frozen != snapshot_lines(graphs):
                raise CatalogError(f"regenerated {name!r} list drifted from the frozen snapshot")
    return cat


@lru_cache(maxsize=1)
def get_catalog() -> Catalog:
    return build_catalog()


def catalog_index(g: SimpleGraph) -> Optional[int]:
    """Stable index of the graph in the forbidden class, if it is a member."""
    return get_catalog().index_of(g)
