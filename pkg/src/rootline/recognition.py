"""Line-graph recognizers with constructive certificates.

Three related recognition problems, each with a certificate:

* line graph of a multigraph: either a root multigraph with an
  edge-instance-to-vertex bijection, or six input vertices inducing a
  member of the frozen forbidden class;
* line graph of a simple graph: decided by the 9-member obstruction list;
* generalized line graph: decided by the 31-member obstruction list, with
  a root whose doubled edges are private pendants (multiplicity at most
  two, one endpoint of every doubled pair on no other edges).

Reconstruction merges non-adjacent twins first (twins are parallel edges
of the root), then rebuilds the simple root of the merged graph: by edge
enumeration at small size, and above that by growing the clique cells that
partition the edges with every vertex in at most two cells.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional, Union

from .catalog import Catalog, get_catalog
from .embedding import merged_graph, twin_classes
from .graphkit import (
    MultiGraph,
    SimpleGraph,
    canonical,
    connected_graphs,
    contains_induced,
    find_isomorphism,
    line_graph,
)
from .mutation import reduce_to_tree, tree_is_An_reducible

SMALL_ROOT_LIMIT = 6


class RecognitionError(RuntimeError):
    """Internal inconsistency between two decision routes (a bug, not a
    property of the input)."""


class NotConnectedError(ValueError):
    pass


@dataclass(frozen=True)
class RootCertificate:
    """A root multigraph plus the bijection from its edge instances (in
    canonical instance order) to the input's vertices."""

    delta: MultiGraph
    edge_to_vertex: tuple[int, ...]


@dataclass(frozen=True)
class WitnessCertificate:
    """Six input vertices inducing the indexed forbidden-catalog member."""

    vertices: tuple[int, ...]
    catalog_index: int


Certificate = Union[RootCertificate, WitnessCertificate]


def verify_certificate(g: SimpleGraph, cert: Certificate, cat: Optional[Catalog] = None) -> bool:
    """Replay a certificate from scratch."""
    if isinstance(cert, RootCertificate):
        built, _ = line_graph(cert.delta)
        mapping = cert.edge_to_vertex
        if built.n != g.n or sorted(mapping) != list(range(g.n)):
            return False
        for a in range(built.n):
            for b in range(a + 1, built.n):
                if built.has_edge(a, b) != g.has_edge(mapping[a], mapping[b]):
                    return False
        return True
    cat = cat or get_catalog()
    if len(cert.vertices) != 6 or len(set(cert.vertices)) != 6:
        return False
    if not all(0 <= v < g.n for v in cert.vertices):
        return False
    induced = g.induced(cert.vertices)
    member = cat.e6_class[cert.catalog_index]
    return canonical(induced) == canonical(member)


def certificate_to_json(cert: Certificate) -> str:
    if isinstance(cert, RootCertificate):
        payload = {
            "kind": "root",
            "multigraph": {
                "n": cert.delta.n,
                "edges": [[u, v, m] for u, v, m in cert.delta.edges],
            },
            "map": list(cert.edge_to_vertex),
        }
    else:
        payload = {
            "kind": "witness",
            "vertices": list(cert.vertices),
            "catalog_index": cert.catalog_index,
        }
    return json.dumps(payload, sort_keys=True)


def certificate_from_json(text: str) -> Certificate:
    data = json.loads(text)
    if data["kind"] == "root":
        delta = MultiGraph(
            data["multigraph"]["n"],
            tuple(sorted((int(u), int(v), int(m)) for u, v, m in data["multigraph"]["edges"])),
        )
        return RootCertificate(delta, tuple(int(x) for x in data["map"]))
    if data["kind"] == "witness":
        return WitnessCertificate(tuple(int(v) for v in data["vertices"]), int(data["catalog_index"]))
    raise ValueError(f"unknown certificate kind {data.get('kind')!r}")


def _require_connected(g: SimpleGraph) -> None:
    if not g.is_connected():
        raise NotConnectedError("recognizers take connected graphs; split into components first")


# ---------------------------------------------------------------------------
# simple-root reconstruction for twin-free graphs


def _simple_root_candidates(n_edges: int) -> Iterator[SimpleGraph]:
    """Connected simple graphs with exactly ``n_edges`` edges, on up to
    ``n_edges + 1`` vertices, in canonical enumeration order."""
    for v in range(1, min(n_edges + 1, 7) + 1):
        for h in connected_graphs(v):
            if h.edge_count() == n_edges:
                yield h


def _as_multigraph(h: SimpleGraph) -> MultiGraph:
    return MultiGraph(h.n, tuple((u, v, 1) for u, v in h.edges()))


def _root_small(g: SimpleGraph) -> Optional[tuple[SimpleGraph, tuple[int, ...]]]:
    """Exhaustive simple-root search; returns the valid root with the least
    canonical form, plus the instance-to-vertex map."""
    best: Optional[tuple] = None
    for h in _simple_root_candidates(g.n):
        built, _ = line_graph(_as_multigraph(h))
        if built.n != g.n or not built.is_connected():
            continue
        mapping = find_isomorphism(built, g)
        if mapping is None:
            continue
        key = canonical(h)
        if best is None or key < best[0]:
            best = (key, h, tuple(mapping))
    if best is None:
        return None
    return best[1], best[2]


def _maximal_cliques(g: SimpleGraph, allowed: int) -> list[int]:
    """Maximal cliques (as bitmasks) of the induced subgraph on ``allowed``."""
    out: list[int] = []

    def extend(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        candidates = p & ~g.adj[u]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            extend(r | low, p & g.adj[v], x & g.adj[v])
            p &= ~low
            x |= low
            candidates ^= low
        return

    extend(0, allowed, 0)
    return out


def _seed_cells(g: SimpleGraph, u: int, v: int) -> list[frozenset[int]]:
    """Candidate cells containing the edge {u, v}: maximal cliques through
    it (largest first), then the bare edge."""
    common = g.adj[u] & g.adj[v]
    seeds: list[frozenset[int]] = []
    if common:
        cliques = _maximal_cliques(g, common)
        expanded = []
        for c in cliques:
            members = frozenset({u, v} | {i for i in range(g.n) if (c >> i) & 1})
            expanded.append(members)
        expanded.sort(key=lambda s: (-len(s), sorted(s)))
        seeds.extend(expanded)
    seeds.append(frozenset({u, v}))
    return seeds


def _propagate_cells(g: SimpleGraph, seed: frozenset[int]) -> Optional[list[frozenset[int]]]:
    """Grow the full cell family from one seed cell.  Cells are cliques that
    partition the edges with every vertex in at most two cells; once the
    seed is fixed everything else is forced: a vertex's uncovered edges must
    form its one remaining cell."""
    for a, b in combinations(sorted(seed), 2):
        if not g.has_edge(a, b):
            return None
    cells: list[frozenset[int]] = [seed]
    cells_at: dict[int, list[int]] = {x: [0] for x in seed}
    covered: set[tuple[int, int]] = {tuple(sorted(p)) for p in combinations(seed, 2)}
    queue = sorted(seed)
    while queue:
        x = queue.pop(0)
        uncovered = [y for y in g.neighbors(x) if tuple(sorted((x, y))) not in covered]
        if not uncovered:
            continue
        if len(cells_at.get(x, [])) >= 2:
            return None
        cell = frozenset([x] + uncovered)
        for a, b in combinations(sorted(cell), 2):
            pair = (a, b)
            if pair in covered:
                return None  # two cells would share two vertices
            if not g.has_edge(a, b):
                return None
        cid = len(cells)
        cells.append(cell)
        for m in sorted(cell):
            slots = cells_at.setdefault(m, [])
            slots.append(cid)
            if len(slots) > 2:
                return None
            if m != x and m not in queue:
                queue.append(m)
        covered.update(tuple(sorted(p)) for p in combinations(cell, 2))
    if len(covered) != g.edge_count():
        return None
    return cells


def _root_from_cells(
    g: SimpleGraph, cells: list[frozenset[int]]
) -> Optional[tuple[SimpleGraph, tuple[int, ...]]]:
    cells_at: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for cid, cell in enumerate(cells):
        for v in cell:
            cells_at[v].append(cid)
    next_id = len(cells)
    for v in range(g.n):
        if len(cells_at[v]) == 1:
            cells_at[v].append(next_id)
            next_id += 1
        elif len(cells_at[v]) != 2:
            return None
    pair_to_vertex: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        a, b = cells_at[v]
        if a == b:
            return None
        key = (min(a, b), max(a, b))
        if key in pair_to_vertex:
            return None  # parallel edges cannot appear for a twin-free graph
        pair_to_vertex[key] = v
    h = SimpleGraph.from_edges(next_id, pair_to_vertex.keys())
    mapping = []
    for u, v, _ in _as_multigraph(h).edge_instances():
        mapping.append(pair_to_vertex[(u, v)])
    return h, tuple(mapping)


def _root_krausz(g: SimpleGraph) -> Optional[tuple[SimpleGraph, tuple[int, ...]]]:
    u = 0
    v = next(g.neighbors(u))
    for seed in _seed_cells(g, u, v):
        cells = _propagate_cells(g, seed)
        if cells is None:
            continue
        res = _root_from_cells(g, cells)
        if res is None:
            continue
        h, mapping = res
        built, _ = line_graph(_as_multigraph(h))
        ok = built.n == g.n and all(
            built.has_edge(a, b) == g.has_edge(mapping[a], mapping[b])
            for a in range(built.n)
            for b in range(a + 1, built.n)
        )
        if ok:
            return h, mapping
    return None


def reconstruct_ordinary(g: SimpleGraph) -> Optional[tuple[SimpleGraph, tuple[int, ...]]]:
    """Simple root of a twin-free connected graph, or None.

    Returns (root, mapping) with mapping[k] = the input vertex realized by
    the root's k-th edge instance.  Small inputs go through exhaustive edge
    enumeration (this is where root ambiguity lives, e.g. the triangle);
    larger ones through the deterministic cell construction with bounded
    backtracking on the seed cell.
    """
    _require_connected(g)
    if any(len(cls) > 1 for cls in twin_classes(g)):
        raise ValueError("reconstruct_ordinary expects a twin-free graph")
    if g.n <= SMALL_ROOT_LIMIT:
        return _root_small(g)
    return _root_krausz(g)


# ---------------------------------------------------------------------------
# the multigraph recognizer


def recognize_multigraph_line_graph(g: SimpleGraph, cat: Optional[Catalog] = None) -> Certificate:
    """Root certificate when the input is the line graph of a multigraph,
    else a six-vertex witness from the forbidden catalog."""
    _require_connected(g)
    cat = cat or get_catalog()
    gbar, classes = merged_graph(g)
    res = reconstruct_ordinary(gbar)
    if res is not None:
        h, bar_mapping = res
        cert = _expand_root(h, bar_mapping, classes)
        if not verify_certificate(g, cert, cat):
            raise RecognitionError("reconstructed root failed replay validation")
        return cert
    witness = find_forbidden_witness(g, cat)
    if witness is None:
        raise RecognitionError(
            "reconstruction failed but no forbidden witness exists; the two routes disagree"
        )
    vertices, index = witness
    return WitnessCertificate(vertices, index)


def _expand_root(
    h: SimpleGraph, bar_mapping: tuple[int, ...], classes: list[list[int]]
) -> RootCertificate:
    """Blow the merged graph's simple root up by twin multiplicities: the
    root edge realizing merged vertex b gets one parallel instance per twin."""
    h_edges = list(h.edges())
    h_instances = _as_multigraph(h).edge_instances()
    edge_class: dict[tuple[int, int], list[int]] = {}
    for k, (u, v, _) in enumerate(h_instances):
        edge_class[(u, v)] = sorted(classes[bar_mapping[k]])
    triples = tuple(sorted((u, v, len(edge_class[(u, v)])) for u, v in h_edges))
    delta = MultiGraph(h.n, triples)
    mapping: list[int] = []
    for u, v, j in delta.edge_instances():
        mapping.append(edge_class[(u, v)][j])
    return RootCertificate(delta, tuple(mapping))


# ---------------------------------------------------------------------------
# witness searches


def _colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if n < k:
        return
    for top in range(k - 1, n):
        for rest in combinations(range(top), k - 1):
            yield rest + (top,)


def find_forbidden_witness(
    g: SimpleGraph, cat: Optional[Catalog] = None
) -> Optional[tuple[tuple[int, ...], int]]:
    """Six vertices inducing a forbidden-catalog member, or None.  Subsets
    are scanned in colex order over the vertices sorted by descending
    degree, with a degree-sequence prefilter."""
    _require_connected(g)
    cat = cat or get_catalog()
    if g.n < 6:
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    member_degseqs = {m.degree_sequence() for m in cat.e6_class}
    rows = [g.adj[v] for v in order]
    for combo in _colex_subsets(g.n, 6):
        mask = 0
        for i in combo:
            mask |= 1 << order[i]
        degs = tuple(sorted((rows[i] & mask).bit_count() for i in combo))
        if degs not in member_degseqs:
            continue
        vertices = tuple(sorted(order[i] for i in combo))
        idx = cat.index_of(g.induced(vertices))
        if idx is not None:
            return vertices, idx
    return None


def _find_obstruction(
    g: SimpleGraph, members: tuple[SimpleGraph, ...]
) -> Optional[tuple[tuple[int, ...], int]]:
    """First member (smallest first) appearing as an induced subgraph, with
    the witness vertices."""
    order = sorted(range(len(members)), key=lambda i: (members[i].n, i))
    for i in order:
        found = contains_induced(g, members[i])
        if found is not None:
            return tuple(sorted(found)), i
    return None


def is_ordinary_line_graph(
    g: SimpleGraph, cat: Optional[Catalog] = None
) -> tuple[bool, Optional[tuple[tuple[int, ...], int]]]:
    """Line graph of a simple graph iff none of the nine obstructions embed;
    on failure returns the witness vertices and the obstruction's index."""
    _require_connected(g)
    cat = cat or get_catalog()
    hit = _find_obstruction(g, cat.beineke)
    if hit is not None:
        return False, hit
    return True, None


def is_generalized_line_graph(
    g: SimpleGraph, cat: Optional[Catalog] = None
) -> tuple[bool, Optional[tuple[tuple[int, ...], int]], Optional[RootCertificate]]:
    """Generalized line graph iff none of the 31 obstructions embed; when
    true, also a root with multiplicities at most two in which every doubled
    pair has a private endpoint."""
    _require_connected(g)
    cat = cat or get_catalog()
    hit = _find_obstruction(g, cat.glg)
    if hit is not None:
        return False, hit, None
    root = _glg_root(g)
    if root is None:
        raise RecognitionError(
            "obstruction-free input admits no private-pendant root; the two routes disagree"
        )
    if not verify_certificate(g, root):
        raise RecognitionError("generalized root failed replay validation")
    return True, None, root


def _glg_shape_ok(delta: MultiGraph) -> bool:
    degree_instances = [0] * delta.n
    for u, v, m in delta.edges:
        degree_instances[u] += m
        degree_instances[v] += m
    for u, v, m in delta.edges:
        if m > 2:
            return False
        if m == 2 and degree_instances[u] != 2 and degree_instances[v] != 2:
            return False
    return True


def _glg_root_small(g: SimpleGraph) -> Optional[RootCertificate]:
    """Search private-pendant-shaped roots directly: a connected simple part
    plus doubled pendant edges attached to it."""
    n = g.n
    for doubles in range(n // 2 + 1):
        simple_edges = n - 2 * doubles
        parts: list[SimpleGraph] = []
        if simple_edges == 0:
            if doubles == 0:
                continue
            parts = [SimpleGraph(1, (0,))]
        else:
            parts = [
                h
                for v in range(2, min(simple_edges + 1, 7) + 1)
                for h in connected_graphs(v)
                if h.edge_count() == simple_edges
            ]
        for h in parts:
            for attach in combinations_with_replacement(range(h.n), doubles):
                triples = [(u, v, 1) for u, v in h.edges()]
                extra = h.n
                for a in attach:
                    triples.append((a, extra, 2))
                    extra += 1
                delta = MultiGraph(extra, tuple(sorted(triples)))
                built, _ = line_graph(delta)
                if built.n != n or not built.is_connected():
                    continue
                mapping = find_isomorphism(built, g)
                if mapping is not None:
                    return RootCertificate(delta, tuple(mapping))
    return None


def _glg_root(g: SimpleGraph) -> Optional[RootCertificate]:
    if g.n <= SMALL_ROOT_LIMIT:
        return _glg_root_small(g)
    gbar, classes = merged_graph(g)
    if any(len(cls) > 2 for cls in classes):
        return None
    roots: list[tuple[SimpleGraph, tuple[int, ...]]] = []
    if gbar.n <= SMALL_ROOT_LIMIT:
        for h in _simple_root_candidates(gbar.n):
            built, _ = line_graph(_as_multigraph(h))
            if built.n != gbar.n or not built.is_connected():
                continue
            mapping = find_isomorphism(built, gbar)
            if mapping is not None:
                roots.append((h, tuple(mapping)))
    else:
        res = _root_krausz(gbar)
        if res is not None:
            roots.append(res)
    for h, bar_mapping in roots:
        cert = _expand_root(h, bar_mapping, classes)
        if _glg_shape_ok(cert.delta) and verify_certificate(g, cert):
            return cert
    return None


# ---------------------------------------------------------------------------
# the tree-reduction route


def recognize_via_tree(g: SimpleGraph) -> bool:
    """Decide line-graph-ness through the equivalent tree of the twin-merged
    graph, an independent route used for cross-validation."""
    _require_connected(g)
    gbar, _ = merged_graph(g)
    tree, _ = reduce_to_tree(gbar)
    return tree_is_An_reducible(tree)
