"""Elementary transformations of embedded graphs, graph-level mutations,
equivalence-class enumeration, and reduction of any connected graph to an
equivalent tree.

An elementary transformation replaces the vector of vertex w by
w + f(v, w) v; at the graph level (on the universal embedding) this XORs
v's row into w's adjacency outside {v, w} whenever v ~ w.  The closure of a
graph under these moves is its equivalence class.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence

from .embedding import EmbeddedGraph, universal_embedding
from .f2core import F2Vector, bits_of
from .graphkit import CanonicalForm, GraphError, SimpleGraph, canonical, contains_induced, named_graph

TransformationLog = tuple[tuple[int, int], ...]

DEFAULT_MAX_CLASSES = 10_000


class MutationError(ValueError):
    pass


class ClassBoundExceeded(RuntimeError):
    """The class enumeration hit its bound; carries the partial class."""

    def __init__(self, bound: int, partial: set[CanonicalForm]):
        super().__init__(f"equivalence class exceeded the bound of {bound} members")
        self.bound = bound
        self.partial = partial


class ReductionError(RuntimeError):
    """The tree reduction's progress measure failed to decrease (diagnostic
    guard; indicates a bug rather than a property of the input)."""


def elementary_transform(eg: EmbeddedGraph, v: int, w: int) -> EmbeddedGraph:
    """Replace w's vector by w + f(v, w) v; everything else unchanged."""
    if v == w:
        raise MutationError("transformation needs two distinct vertex indices")
    space = eg.space
    vv, wv = eg.vectors[v], eg.vectors[w]
    if not space.f_masks(vv.bits, wv.bits):
        return eg
    return eg.replace_vector(w, F2Vector(wv.bits ^ vv.bits, space.dim))


def replay_log(eg: EmbeddedGraph, log: Iterable[tuple[int, int]]) -> EmbeddedGraph:
    for v, w in log:
        eg = elementary_transform(eg, v, w)
    return eg


def log_to_json(log: TransformationLog) -> str:
    return json.dumps([[v, w] for v, w in log])


def log_from_json(text: str) -> TransformationLog:
    data = json.loads(text)
    return tuple((int(v), int(w)) for v, w in data)


def graph_mutation(g: SimpleGraph, v: int, w: int) -> SimpleGraph:
    """Combinatorial form of the elementary transformation on the universal
    embedding: if v ~ w, the new neighborhood of w outside {v, w} is the XOR
    with v's, and the edge v ~ w stays."""
    if v == w:
        raise MutationError("mutation needs two distinct vertices")
    if not g.has_edge(v, w):
        return g
    exclude = (1 << v) | (1 << w)
    rows = list(g.adj)
    new_row = (rows[w] ^ rows[v]) & ~exclude | (1 << v)
    for x in range(g.n):
        if x == w:
            continue
        if (new_row >> x) & 1:
            rows[x] |= 1 << w
        else:
            rows[x] &= ~(1 << w)
    rows[w] = new_row
    return SimpleGraph(g.n, tuple(rows))


def equivalence_class(
    g: SimpleGraph, max_classes: int = DEFAULT_MAX_CLASSES
) -> set[CanonicalForm]:
    """BFS closure of the graph under mutations over all ordered adjacent
    pairs, up to isomorphism.  Raises :class:`ClassBoundExceeded` when the
    frontier is still alive at the bound."""
    if not g.is_connected():
        raise MutationError("equivalence classes are enumerated for connected graphs")
    start = canonical(g)
    seen: set[CanonicalForm] = {start}
    frontier = [start.to_graph()]
    while frontier:
        fresh: list[SimpleGraph] = []
        for cur in frontier:
            for v in range(cur.n):
                for w in bits_of(cur.adj[v]):
                    nxt = graph_mutation(cur, v, w)
                    form = canonical(nxt)
                    if form not in seen:
                        if len(seen) >= max_classes:
                            raise ClassBoundExceeded(max_classes, seen)
                        seen.add(form)
                        fresh.append(form.to_graph())
        frontier = fresh
    return seen


def class_members(g: SimpleGraph, max_classes: int = DEFAULT_MAX_CLASSES) -> list[SimpleGraph]:
    """The equivalence class as canonical representatives in sorted order."""
    return [form.to_graph() for form in sorted(equivalence_class(g, max_classes))]


# ---------------------------------------------------------------------------
# tree reduction


def _induced_graph_from_vectors(eg: EmbeddedGraph) -> SimpleGraph:
    return eg.induced_graph()


def _is_tree(g: SimpleGraph) -> bool:
    return g.is_connected() and g.edge_count() == g.n - 1


def _shortest_cycle_through(g: SimpleGraph, v: int, allowed: int) -> Optional[list[int]]:
    """Shortest cycle through v inside the induced subgraph on ``allowed``
    (a vertex bitmask containing v); ties broken toward lexicographically
    smaller vertex sequences.  Returns [v, a, ..., b] or None."""
    neigh = [x for x in bits_of(g.adj[v] & allowed)]
    best: Optional[list[int]] = None
    for a in neigh:
        # BFS from a in allowed minus v, finding nearest other neighbor of v
        parent = {a: -1}
        frontier = [a]
        found: Optional[int] = None
        while frontier and found is None:
            nxt: list[int] = []
            for x in frontier:
                for y in bits_of(g.adj[x] & allowed):
                    if y == v or y in parent:
                        continue
                    parent[y] = x
                    if g.has_edge(y, v) and y != a:
                        found = y
                        break
                    nxt.append(y)
                if found is not None:
                    break
            frontier = nxt
        if found is None:
            continue
        path = [found]
        while path[-1] != a:
            path.append(parent[path[-1]])
        path.reverse()
        cycle = [v] + path
        if best is None or (len(cycle), cycle) < (len(best), best):
            best = cycle
    return best


def _apply_cycle_reduction(
    eg: EmbeddedGraph, cycle: Sequence[int], targets: Sequence[int]
) -> tuple[EmbeddedGraph, list[tuple[int, int]]]:
    """The composite transformation that lowers the degree of cycle[0] by one:
    centers cycle[1..n-2] applied first to cycle[0], then to every target
    outside the cycle."""
    v = cycle[0]
    centers = list(cycle[1:-1])
    log: list[tuple[int, int]] = []
    for c in centers:
        log.append((c, v))
    for w in targets:
        for c in centers:
            log.append((c, w))
    return replay_log(eg, log), log


def _on_a_cycle(g: SimpleGraph, v: int) -> bool:
    full = (1 << g.n) - 1
    return _shortest_cycle_through(g, v, full) is not None


def reduce_to_tree(g: SimpleGraph) -> tuple[SimpleGraph, TransformationLog]:
    """Transform a connected graph into an equivalent tree.

    Grows a subtree T that no cycle meets twice; while some T-vertex v still
    lies on a cycle, that cycle lives outside T (except for v) and a
    shortest such cycle is collapsed, dropping v's degree by exactly one.
    Once v is cycle-free, a neighbor of v joins T.  Replaying the returned
    log on the universal embedding of the input reproduces the tree.
    """
    if not g.is_connected():
        raise MutationError("tree reduction needs a connected graph")
    eg = universal_embedding(g)
    full_log: list[tuple[int, int]] = []
    current = g
    n = g.n
    in_tree = 1 << 0
    while in_tree != (1 << n) - 1:
        tree_vertices = list(bits_of(in_tree))
        # prefer endpoints (leaves of the induced tree) with outside neighbors
        outside = ~in_tree & ((1 << n) - 1)
        tdeg = {
            t: (current.adj[t] & in_tree).bit_count() for t in tree_vertices
        }
        candidates = [t for t in tree_vertices if current.adj[t] & outside]
        if not candidates:
            raise ReductionError("connected graph has no tree vertex with outside neighbors")
        leafish = [t for t in candidates if tdeg[t] <= 1]
        v = min(leafish) if leafish else min(candidates)

        allowed = outside | (1 << v)
        guard = current.degree(v)
        while True:
            cycle = _shortest_cycle_through(current, v, allowed)
            if cycle is None:
                break
            targets = sorted(set(bits_of(allowed)) - set(cycle))
            eg, log = _apply_cycle_reduction(eg, cycle, targets)
            full_log.extend(log)
            current = eg.induced_graph()
            if current.degree(v) != guard - 1:
                raise ReductionError(
                    f"degree of vertex {v} moved {guard} -> {current.degree(v)}, expected {guard - 1}"
                )
            guard -= 1
        if _on_a_cycle(current, v):
            raise ReductionError(
                f"vertex {v} still lies on a cycle outside its reduction region"
            )
        w = min(bits_of(current.adj[v] & outside))
        in_tree |= 1 << w
        # the grown set must stay a tree that no cycle meets twice
        if not _is_tree(current.induced(list(bits_of(in_tree)))):
            raise ReductionError("grown vertex set no longer induces a tree")
    if not _is_tree(current):
        raise ReductionError("reduction terminated on a non-tree")
    return current, tuple(full_log)


# ---------------------------------------------------------------------------
# recognizing A_n-reducible trees


def _double_broom_shape(t: SimpleGraph) -> bool:
    """A path with pendant leaves allowed only at its two end vertices
    (paths, stars and single edges are degenerate cases)."""
    if t.n <= 3:
        return True
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    core = [v for v in range(t.n) if t.degree(v) >= 2]
    if not core:
        # a single edge
        return t.n == 2
    spine = t.induced(core)
    if not spine.is_connected():
        return False
    spine_degrees = sorted(spine.degree(i) for i in range(spine.n))
    if spine.n == 1:
        ends = {core[0]}
    else:
        if spine_degrees[-1] > 2 or spine.edge_count() != spine.n - 1:
            return False
        ends = {core[i] for i in range(spine.n) if spine.degree(i) <= 1}
    return all(any(t.has_edge(leaf, e) for e in ends) for leaf in leaves)


def tree_is_An_reducible(t: SimpleGraph) -> bool:
    """Whether the tree reduces (after twin merging) to a path: equivalently
    it has no induced six-vertex fork of the E6 shape.  Both the shape
    analysis and the induced-subgraph search are run; they must agree."""
    if not _is_tree(t):
        raise MutationError("input is not a tree")
    shape = _double_broom_shape(t)
    fork = contains_induced(t, named_graph("E", 6)) is not None
    if shape == fork:
        raise ReductionError(
            f"shape analysis ({shape}) disagrees with the fork search ({fork})"
        )
    return shape
