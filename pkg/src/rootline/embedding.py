"""Orthogonal GF(2) embeddings of graphs.

A graph embeds into a quadratic space by sending each vertex to an
anisotropic vector so that adjacency matches Q(v + w) = 1 (equivalently
f(v, w) = 1 for anisotropic v, w).  The universal embedding uses one
coordinate per vertex; the minimal embedding is its quotient by the full
isotropic radical and identifies exactly the non-adjacent twin vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .f2core import (
    F2Vector,
    QuadraticSpace,
    bits_of,
    isotropic_radical,
    parity,
    quotient,
    rref,
)
from .graphkit import SimpleGraph

CLOSURE_DIM_LIMIT = 20


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class EmbeddedGraph:
    """Anisotropic vectors realizing a graph inside a quadratic space.

    ``vectors[i]`` is the image of vertex i.  Twin vertices may share a
    vector (then f of the pair is 0, consistent with their non-adjacency).
    """

    space: QuadraticSpace
    vectors: tuple[F2Vector, ...]

    def __post_init__(self) -> None:
        span_rows = []
        for v in self.vectors:
            self.space.check_vector(v)
            if not self.space.q_mask(v.bits):
                raise EmbeddingError("vertex image is not anisotropic")
            span_rows.append(v.bits)
        if len(rref(span_rows)) != self.space.dim:
            raise EmbeddingError("vertex images do not span the space")

    @property
    def n(self) -> int:
        return len(self.vectors)

    def induced_graph(self) -> SimpleGraph:
        rows = [0] * self.n
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.space.f_masks(self.vectors[i].bits, self.vectors[j].bits):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return SimpleGraph(self.n, tuple(rows))

    def replace_vector(self, index: int, vector: F2Vector) -> "EmbeddedGraph":
        vecs = list(self.vectors)
        vecs[index] = vector
        return EmbeddedGraph(self.space, tuple(vecs))


def ordered_pair_form(g: SimpleGraph, ordering: Sequence[int], u: F2Vector, w: F2Vector) -> int:
    """The order-dependent pairing on subsets of vertices: the number of
    ordered pairs (x, y) in u x w with x before y in the ordering and {x, y}
    an edge, or x = y, taken mod 2.  Its symmetrization and diagonal are
    order-independent; tests verify that by recomputation."""
    if sorted(ordering) != list(range(g.n)):
        raise EmbeddingError("ordering must be a permutation of the vertices")
    if u.n != g.n or w.n != g.n:
        raise EmbeddingError("subset vectors must have one coordinate per vertex")
    position = [0] * g.n
    for pos, v in enumerate(ordering):
        position[v] = pos
    acc = parity(u.bits & w.bits)
    for x in bits_of(u.bits):
        for y in bits_of(w.bits):
            if position[x] < position[y] and g.has_edge(x, y):
                acc ^= 1
    return acc


def universal_embedding(g: SimpleGraph, ordering: Optional[Sequence[int]] = None) -> EmbeddedGraph:
    """One coordinate per vertex: Q = 1 on the basis, gram = adjacency.

    The construction routes through the order-dependent pairing for the given
    ordering (default: vertex order); the resulting forms do not depend on it.
    """
    if ordering is None:
        ordering = list(range(g.n))
    basis = [F2Vector.basis(i, g.n) for i in range(g.n)]
    qdiag = 0
    for i in range(g.n):
        if ordered_pair_form(g, ordering, basis[i], basis[i]):
            qdiag |= 1 << i
    rows = [0] * g.n
    for i in range(g.n):
        for j in range(i + 1, g.n):
            val = ordered_pair_form(g, ordering, basis[i], basis[j]) ^ ordered_pair_form(
                g, ordering, basis[j], basis[i]
            )
            if val:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    space = QuadraticSpace(g.n, tuple(rows), qdiag)
    return EmbeddedGraph(space, tuple(basis))


def minimal_embedding(g: SimpleGraph) -> tuple[EmbeddedGraph, tuple[int, ...]]:
    """Quotient of the universal embedding by the full isotropic radical.

    Returns the embedding and a merge map sending each vertex to the lowest
    vertex sharing its image; by the quotient construction those are exactly
    the non-adjacent twins (same neighborhood).
    """
    eg = universal_embedding(g)
    rad = isotropic_radical(eg.space)
    qspace, images = quotient(eg.space, rad, list(eg.vectors))
    merge = []
    first_with: dict[int, int] = {}
    for i, vec in enumerate(images):
        merge.append(first_with.setdefault(vec.bits, i))
    return EmbeddedGraph(qspace, tuple(images)), tuple(merge)


def twin_classes(g: SimpleGraph) -> list[list[int]]:
    """Classes of mutually non-adjacent vertices with equal neighborhoods,
    by direct neighborhood comparison (no embedding machinery)."""
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v], []).append(v)
    return [cls for cls in classes.values()]


def merged_graph(g: SimpleGraph) -> tuple[SimpleGraph, list[list[int]]]:
    """The twin-merged graph (one representative per twin class, in order of
    lowest members) together with the classes."""
    classes = sorted(twin_classes(g), key=lambda c: c[0])
    reps = [c[0] for c in classes]
    rows = []
    for a, u in enumerate(reps):
        row = 0
        for b, w in enumerate(reps):
            if a != b and g.has_edge(u, w):
                row |= 1 << b
        rows.append(row)
    return SimpleGraph(len(reps), tuple(rows)), classes


def cotriangular_closure(eg: EmbeddedGraph) -> frozenset[F2Vector]:
    """Close the vertex images under third points of elliptic lines: whenever
    f(p, q) = 1 for members p, q, the third point p + q joins the set."""
    space = eg.space
    if space.dim > CLOSURE_DIM_LIMIT:
        raise EmbeddingError(
            f"closure materialization limited to dimension {CLOSURE_DIM_LIMIT}"
        )
    members: set[int] = set()
    grams: dict[int, int] = {}
    worklist: list[int] = []
    for v in eg.vectors:
        if v.bits not in members:
            members.add(v.bits)
            grams[v.bits] = space.gram_combine(v.bits)
            worklist.append(v.bits)
    while worklist:
        p = worklist.pop()
        gp = grams[p]
        for q in list(members):
            if q == p:
                continue
            if parity(gp & q):
                r = p ^ q
                if r not in members:
                    members.add(r)
                    grams[r] = space.gram_combine(r)
                    worklist.append(r)
    return frozenset(F2Vector(m, space.dim) for m in members)
