"""Brute-force reference decisions straight from the definitions.

Everything here is deliberately written against its own adjacency-matrix
representation with its own enumeration, isomorphism (raw permutation
search restricted to refinement classes), and line-graph construction, so
that agreement with the recognition module is evidence rather than a
tautology.  Intended for tests and small-instance auditing only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

from .graphkit import CanonicalForm, MultiGraph, SimpleGraph
from .graphkit import canonical as _boundary_canonical

Matrix = tuple[tuple[int, ...], ...]


class OracleBudgetError(ValueError):
    """The requested decision cannot be made exhaustively within the budget."""


@dataclass(frozen=True)
class OracleBudget:
    max_root_vertices: int = 7
    max_edge_instances: int = 6
    max_multiplicity: int = 6

    def __post_init__(self) -> None:
        if min(self.max_root_vertices, self.max_edge_instances, self.max_multiplicity) < 1:
            raise OracleBudgetError("budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


def _matrix_from_graph(g: SimpleGraph) -> Matrix:
    return tuple(
        tuple(1 if g.has_edge(i, j) else 0 for j in range(g.n)) for i in range(g.n)
    )


def _graph_from_matrix(mat: Matrix) -> SimpleGraph:
    n = len(mat)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if mat[i][j]]
    return SimpleGraph.from_edges(n, edges)


def _edge_count(mat: Matrix) -> int:
    return sum(sum(row) for row in mat) // 2


def _is_connected(mat: Matrix) -> bool:
    n = len(mat)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in range(n):
            if mat[x][y] and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _refinement_classes(mat: Matrix) -> list[list[int]]:
    n = len(mat)
    color = [sum(row) for row in mat]
    for _ in range(n):
        keys = [
            (color[v], tuple(sorted(color[w] for w in range(n) if mat[v][w])))
            for v in range(n)
        ]
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        new_color = [palette[k] for k in keys]
        if new_color == color:
            break
        color = new_color
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _class_respecting_orders(classes: list[list[int]]) -> Iterator[tuple[int, ...]]:
    if not classes:
        yield ()
        return
    head, rest = classes[0], classes[1:]
    for perm in permutations(head):
        for tail in _class_respecting_orders(rest):
            yield perm + tail


def _canon(mat: Matrix) -> tuple:
    """Minimal flattened matrix over all labelings that respect the
    refinement classes (exact: an isomorphism maps classes onto classes)."""
    n = len(mat)
    classes = _refinement_classes(mat)
    best: Optional[tuple] = None
    for order in _class_respecting_orders(classes):
        pos = [0] * n
        for new, old in enumerate(order):
            pos[old] = new
        flat = tuple(
            mat[order[i]][order[j]] for i in range(n) for j in range(i + 1, n)
        )
        if best is None or flat < best:
            best = flat
    return (n, best)


def _isomorphic(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b) or _edge_count(a) != _edge_count(b):
        return False
    if sorted(sum(r) for r in a) != sorted(sum(r) for r in b):
        return False
    return _canon(a) == _canon(b)


def _with_vertex(mat: Matrix, mask: int) -> Matrix:
    n = len(mat)
    rows = [list(row) + [(mask >> i) & 1] for i, row in enumerate(mat)]
    rows.append([(mask >> i) & 1 for i in range(n)] + [0])
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def _connected_matrices(v: int, max_edges: int) -> tuple[Matrix, ...]:
    if v == 1:
        return (((0,),),)
    out: dict[tuple, Matrix] = {}
    for parent in _connected_matrices(v - 1, max_edges):
        for mask in range(1, 1 << (v - 1)):
            child = _with_vertex(parent, mask)
            if _edge_count(child) > max_edges:
                continue
            key = _canon(child)
            if key not in out:
                out[key] = child
    return tuple(out.values())


def _line_graph_of_instances(instances: list[tuple[int, int]]) -> Matrix:
    m = len(instances)
    rows = [[0] * m for _ in range(m)]
    for a in range(m):
        ea = set(instances[a])
        for b in range(a + 1, m):
            if len(ea & set(instances[b])) == 1:
                rows[a][b] = rows[b][a] = 1
    return tuple(tuple(r) for r in rows)


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(1, min(cap, total - parts + 1) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _root_shape_allows(kind: str, edges: list[tuple[int, int]], mult: tuple[int, ...]) -> bool:
    if kind == "multigraph":
        return True
    if kind == "ordinary":
        return all(m == 1 for m in mult)
    if kind == "generalized":
        degree = {}
        for (u, v), m in zip(edges, mult):
            degree[u] = degree.get(u, 0) + m
            degree[v] = degree.get(v, 0) + m
        for (u, v), m in zip(edges, mult):
            if m > 2:
                return False
            if m == 2 and degree[u] != 2 and degree[v] != 2:
                return False
        return True
    raise ValueError(f"unknown root kind {kind!r}")


@lru_cache(maxsize=None)
def _line_graph_library(
    budget: OracleBudget, kind: str
) -> dict[int, dict[tuple, tuple[int, tuple[tuple[int, int, int], ...]]]]:
    """Map vertex count -> canon -> (root vertex count, root edge triples)
    over every connected line graph obtainable within the budget."""
    library: dict[int, dict[tuple, tuple[int, tuple[tuple[int, int, int], ...]]]] = {}
    for n in range(1, budget.max_edge_instances + 1):
        library[n] = {}
    for v in range(2, budget.max_root_vertices + 1):
        for mat in _connected_matrices(v, budget.max_edge_instances):
            edges = [
                (i, j) for i in range(v) for j in range(i + 1, v) if mat[i][j]
            ]
            e = len(edges)
            if e == 0 or len(mat) != v:
                continue
            for n in range(e, budget.max_edge_instances + 1):
                for mult in _compositions(n, e, budget.max_multiplicity):
                    if not _root_shape_allows(kind, edges, mult):
                        continue
                    instances: list[tuple[int, int]] = []
                    for (u, w), m in zip(edges, mult):
                        instances.extend([(u, w)] * m)
                    lg = _line_graph_of_instances(instances)
                    if not _is_connected(lg):
                        continue
                    key = _canon(lg)
                    if key not in library[n]:
                        triples = tuple(
                            sorted((u, w, m) for (u, w), m in zip(edges, mult))
                        )
                        library[n][key] = (v, triples)
    return library


def oracle_is_multigraph_line_graph(
    g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET, kind: str = "multigraph"
) -> Optional[MultiGraph]:
    """A root multigraph whose line graph is isomorphic to the input, found
    by exhaustive search over all roots within the budget, or None.

    A connected root for an n-instance line graph has at most n + 1
    vertices, so the budget is sufficient whenever
    max_edge_instances >= n and max_root_vertices >= n + 1 (or the search
    space is otherwise exhausted); an insufficient budget raises."""
    if g.n > 7:
        raise OracleBudgetError("the oracle handles at most 7 vertices")
    if (
        g.n > budget.max_edge_instances
        or g.n + 1 > budget.max_root_vertices
        or (g.n > 2 and g.n - 1 > budget.max_multiplicity)
    ):
        raise OracleBudgetError(
            f"budget {budget} cannot exhaust roots for a {g.n}-vertex input"
        )
    if g.n == 1:
        return MultiGraph(2, ((0, 1, 1),))
    if not g.is_connected():
        raise OracleBudgetError("the oracle decides connected inputs only")
    library = _line_graph_library(budget, kind)
    hit = library[g.n].get(_canon(_matrix_from_graph(g)))
    if hit is None:
        return None
    root_vertices, triples = hit
    return MultiGraph(root_vertices, triples)


def _oracle_decision(mat: Matrix, budget: OracleBudget, kind: str) -> bool:
    n = len(mat)
    if n == 1:
        return True
    return _canon(mat) in _line_graph_library(budget, kind)[n]


def _components(mat: Matrix) -> list[Matrix]:
    n = len(mat)
    left = set(range(n))
    comps = []
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in range(n):
                if mat[x][y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        order = sorted(seen)
        comps.append(tuple(tuple(mat[i][j] for j in order) for i in order))
        left -= seen
    return comps


def oracle_minimal_forbidden(
    n_max: int, budget: OracleBudget = DEFAULT_BUDGET, kind: str = "multigraph"
) -> set[CanonicalForm]:
    """All connected graphs on at most ``n_max`` vertices that are not line
    graphs (of the requested root kind) while every proper connected induced
    subgraph is one.  Exhaustive from the definition."""
    if n_max > 6:
        raise OracleBudgetError("minimal-forbidden enumeration is bounded at 6 vertices")
    if (
        n_max > budget.max_edge_instances
        or n_max + 1 > budget.max_root_vertices
        or (n_max > 2 and n_max - 1 > budget.max_multiplicity)
    ):
        raise OracleBudgetError(f"budget {budget} cannot exhaust roots up to {n_max} vertices")
    out: set[CanonicalForm] = set()
    for v in range(2, n_max + 1):
        for mat in _connected_matrices(v, v * (v - 1) // 2):
            if _oracle_decision(mat, budget, kind):
                continue
            minimal = True
            for drop in range(v):
                keep = [i for i in range(v) if i != drop]
                sub = tuple(tuple(mat[i][j] for j in keep) for i in keep)
                for comp in _components(sub):
                    if not _oracle_decision(comp, budget, kind):
                        minimal = False
                        break
                if not minimal:
                    break
            if minimal:
                out.add(_boundary_canonical(_graph_from_matrix(mat)))
    return out
