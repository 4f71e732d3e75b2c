"""Simple graphs and loopless multigraphs: construction, named families,
isomorphism and canonical forms, induced-subgraph search, enumeration, I/O.

Adjacency is stored as row bitmasks.  The line graph of a multigraph follows
the single-vertex convention: two edge instances are adjacent iff they share
exactly one endpoint, so parallel edges give NON-adjacent line-graph vertices.
This differs from textbook multigraph line graphs that join parallel edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .f2core import bits_of

ENUMERATION_LIMIT = 7


class GraphError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed graph input; carries a human-readable position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class SimpleGraph:
    """A loopless simple graph on vertices 0..n-1 with adjacency row masks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graphs need at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if not 0 <= row <= full:
                raise GraphError(f"adjacency row {v} out of range")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for w in range(v + 1, self.n):
                if ((self.adj[v] >> w) & 1) != ((self.adj[w] >> v) & 1):
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def neighbors(self, v: int) -> Iterator[int]:
        return bits_of(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for w in bits_of(self.adj[v] >> (v + 1)):
                yield (v, w + v + 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits_of(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list[tuple[int, ...]]:
        left = (1 << self.n) - 1
        out = []
        while left:
            start = left & -left
            seen = start
            frontier = start
            while frontier:
                grow = 0
                for v in bits_of(frontier):
                    grow |= self.adj[v]
                frontier = grow & ~seen
                seen |= frontier
            out.append(tuple(bits_of(seen)))
            left &= ~seen
        return out

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        rows = []
        for a, u in enumerate(vertices):
            row = 0
            for b, w in enumerate(vertices):
                if a != b and self.has_edge(u, w):
                    row |= 1 << b
            rows.append(row)
        return SimpleGraph(len(vertices), tuple(rows))

    def permuted(self, perm: Sequence[int]) -> "SimpleGraph":
        """Relabel: vertex v goes to position perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            for w in bits_of(self.adj[v]):
                rows[perm[v]] |= 1 << perm[w]
        return SimpleGraph(self.n, tuple(rows))

    def with_vertex(self, neighborhood: int) -> "SimpleGraph":
        """Append a new vertex adjacent to the given mask of old vertices."""
        rows = [row | (((neighborhood >> v) & 1) << self.n) for v, row in enumerate(self.adj)]
        rows.append(neighborhood)
        return SimpleGraph(self.n + 1, tuple(rows))


@dataclass(frozen=True)
class MultiGraph:
    """A loopless multigraph: sorted (u, v, multiplicity) triples with u < v."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("multigraphs need at least one vertex")
        seen = set()
        for u, v, m in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) not normalized or out of range")
            if m < 1:
                raise GraphError(f"multiplicity {m} on ({u}, {v}) must be positive")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge entry ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        counts: dict[tuple[int, int], int] = {}
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
        return cls(n, tuple(sorted((u, v, m) for (u, v), m in counts.items())))

    @classmethod
    def from_multi_edges(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> "MultiGraph":
        counts: dict[tuple[int, int], int] = {}
        for u, v, m in triples:
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + m
        return cls(n, tuple(sorted((u, v, m) for (u, v), m in counts.items())))

    def multiplicity(self, u: int, v: int) -> int:
        a, b = min(u, v), max(u, v)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 0

    def edge_instances(self) -> list[tuple[int, int, int]]:
        """Edge instances (u, v, copy) in canonical order."""
        out = []
        for u, v, m in self.edges:
            for k in range(m):
                out.append((u, v, k))
        return out

    def instance_count(self) -> int:
        return sum(m for _, _, m in self.edges)

    def underlying_simple(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, [(u, v) for u, v, _ in self.edges])

    def is_connected(self) -> bool:
        return self.underlying_simple().is_connected()


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical encoding: (n, minimal upper-triangle bit code).

    The code packs the pairs (i, j), i < j in colex order (the graph6 payload
    order); two graphs are isomorphic iff their canonical forms are equal.
    """

    n: int
    code: int

    def to_graph(self) -> SimpleGraph:
        rows = [0] * self.n
        k = 0
        for j in range(1, self.n):
            for i in range(j):
                if (self.code >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return SimpleGraph(self.n, tuple(rows))


def pair_code(g: SimpleGraph) -> int:
    code = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        code |= (row & ((1 << j) - 1)) << k
        k += j
    return code


def canonical(g: SimpleGraph) -> CanonicalForm:
    """Minimal pair code over all vertex labelings.

    Minimizes the column sequence (adjacency of each newly labeled vertex to
    the already labeled ones) lexicographically, which is an exhaustive
    minimization over all labelings.  The search runs level-synchronously,
    keeping every tied partial labeling but collapsing partials whose futures
    are literally identical (same adjacency pattern of each remaining vertex
    to the placement), which tames highly symmetric graphs like cliques.
    """
    n = g.n
    if n == 1:
        return CanonicalForm(1, 0)
    adj = g.adj
    partials: list[tuple[int, ...]] = [()]
    code = 0
    offset = 0
    for j in range(n):
        best_col: Optional[int] = None
        survivors: list[tuple[int, ...]] = []
        seen_keys: set[tuple[int, ...]] = set()
        for placement in partials:
            used = 0
            for p in placement:
                used |= 1 << p
            for v in range(n):
                if (used >> v) & 1:
                    continue
                row = adj[v]
                col = 0
                for i, p in enumerate(placement):
                    if (row >> p) & 1:
                        col |= 1 << i
                if best_col is not None and col > best_col:
                    continue
                new_placement = placement + (v,)
                if best_col is None or col < best_col:
                    best_col = col
                    survivors = [new_placement]
                    seen_keys = {_future_key(adj, n, new_placement)}
                else:
                    key = _future_key(adj, n, new_placement)
                    if key not in seen_keys:
                        seen_keys.add(key)
                        survivors.append(new_placement)
        partials = survivors
        code |= best_col << offset  # type: ignore[operator]
        offset += j
    return CanonicalForm(n, code)


def _future_key(adj: tuple[int, ...], n: int, placement: tuple[int, ...]) -> tuple[int, ...]:
    """Signature of a partial labeling: each remaining vertex's adjacency
    bits to the placement, listed by vertex.  Equal keys mean the remaining
    search trees coincide under the identity map on remaining vertices."""
    placed = 0
    for p in placement:
        placed |= 1 << p
    out = []
    for v in range(n):
        if (placed >> v) & 1:
            continue
        row = adj[v]
        bits = 0
        for i, p in enumerate(placement):
            if (row >> p) & 1:
                bits |= 1 << i
        out.append((v << len(placement)) | bits)
    return tuple(out)


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical(g) == canonical(h)


def find_isomorphism(g: SimpleGraph, h: SimpleGraph) -> Optional[list[int]]:
    """A vertex map (list over g's vertices, values in h) realizing g ≅ h,
    or None.  Backtracking with degree pruning; deterministic."""
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    mapping = [-1] * n
    used = [False] * n
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def ok(v: int, w: int, depth: int) -> bool:
        if g.degree(v) != h.degree(w):
            return False
        for prev in order[:depth]:
            if g.has_edge(v, prev) != h.has_edge(w, mapping[prev]):
                return False
        return True

    def rec(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if not used[w] and ok(v, w, depth):
                mapping[v] = w
                used[w] = True
                if rec(depth + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return mapping if rec(0) else None


def contains_induced(g: SimpleGraph, h: SimpleGraph) -> Optional[list[int]]:
    """Vertices of g (in h-vertex order) inducing a copy of h, or None.

    Exhaustive backtracking with degree and adjacency pruning.
    """
    if h.n > g.n:
        return None
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    # place connected-first within the chosen order to prune early
    placed_order: list[int] = []
    remaining = set(order)
    while remaining:
        anchor = next(
            (v for v in order if v in remaining and any(w not in remaining for w in h.neighbors(v))),
            None,
        )
        if anchor is None:
            anchor = next(v for v in order if v in remaining)
        placed_order.append(anchor)
        remaining.discard(anchor)
    mapping = [-1] * h.n
    used = [False] * g.n

    def rec(depth: int) -> bool:
        if depth == h.n:
            return True
        v = placed_order[depth]
        for w in range(g.n):
            if used[w] or g.degree(w) < h.degree(v):
                continue
            good = True
            for prev in placed_order[:depth]:
                if h.has_edge(v, prev) != g.has_edge(w, mapping[prev]):
                    good = False
                    break
            if good:
                mapping[v] = w
                used[w] = True
                if rec(depth + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return mapping[:] if rec(0) else None


# ---------------------------------------------------------------------------
# named families


def named_graph(family: str, n: int) -> SimpleGraph:
    """Standard families: A (path), D (fork at one end), E (E6/E7/E8),
    Cycle, Clique, Star."""
    fam = family.upper() if len(family) == 1 else family.capitalize()
    if fam == "A":
        if n < 1:
            raise GraphError("A_n needs n >= 1")
        return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "D":
        if n < 4:
            raise GraphError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((1, n - 1))
        return SimpleGraph.from_edges(n, edges)
    if fam == "E":
        if n not in (6, 7, 8):
            raise GraphError("E_n needs n in {6, 7, 8}")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((2, n - 1))
        return SimpleGraph.from_edges(n, edges)
    if fam == "Cycle":
        if n < 3:
            raise GraphError("cycles need n >= 3")
        return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "Clique":
        if n < 1:
            raise GraphError("cliques need n >= 1")
        return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if fam == "Star":
        if n < 2:
            raise GraphError("stars need n >= 2")
        return SimpleGraph.from_edges(n, [(0, i) for i in range(1, n)])
    raise GraphError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# line graphs


def line_graph(d: MultiGraph) -> tuple[SimpleGraph, list[tuple[int, int, int]]]:
    """Line graph of a multigraph: one vertex per edge instance, adjacent iff
    the instances share exactly one endpoint.  Parallel instances share both
    endpoints and are therefore NOT adjacent.  Returns the graph and the
    instance labels in vertex order."""
    labels = d.edge_instances()
    m = len(labels)
    rows = [0] * m
    for a in range(m):
        ua, va, _ = labels[a]
        ea = {ua, va}
        for b in range(a + 1, m):
            ub, vb, _ = labels[b]
            if len(ea & {ub, vb}) == 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return SimpleGraph(m, tuple(rows)), labels


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _connected_upto(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1, (0,)),)
    out: dict[CanonicalForm, SimpleGraph] = {}
    for parent in _connected_upto(n - 1):
        for mask in range(1, 1 << (n - 1)):
            child = parent.with_vertex(mask)
            form = canonical(child)
            if form not in out:
                out[form] = form.to_graph()
    return tuple(out[key] for key in sorted(out))


def connected_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """All connected graphs on n vertices, one canonical representative per
    isomorphism class, sorted by canonical form.

    Every connected graph on n >= 2 vertices has a non-cut vertex (a leaf of
    a spanning tree), so augmenting each connected (n-1)-vertex graph by one
    vertex with a nonempty neighborhood reaches every class.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise GraphError(f"enumeration supports 1..{ENUMERATION_LIMIT} vertices")
    return _connected_upto(n)


def enumerate_connected_graphs(n: int) -> Iterator[CanonicalForm]:
    for g in connected_graphs(n):
        yield CanonicalForm(g.n, pair_code(g))


# ---------------------------------------------------------------------------
# graph6 I/O (bit-exact: 6-bit chunks, bias 63, column-major upper triangle)


def emit_graph6(g: SimpleGraph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphError("graph6 emission supports n <= 258047")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str, line: int = 1) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string", line, 1)
    pos = 0
    first = ord(s[0]) - 63
    if first < 0 or first > 63:
        raise ParseError(f"invalid graph6 byte {s[0]!r}", line, 1)
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ParseError("graph6 inputs beyond 258047 vertices unsupported", line, 2)
        if len(s) < 4:
            raise ParseError("truncated graph6 size block", line, len(s) + 1)
        n = 0
        for k in range(1, 4):
            v = ord(s[k]) - 63
            if v < 0 or v > 63:
                raise ParseError(f"invalid graph6 byte {s[k]!r}", line, k + 1)
            n = (n << 6) | v
        pos = 4
    else:
        n = first
        pos = 1
    if n < 1:
        raise ParseError("graph6 graph must have at least one vertex", line, 1)
    need = n * (n - 1) // 2
    chunks = s[pos:]
    if len(chunks) * 6 < need:
        raise ParseError(
            f"graph6 payload too short: need {need} bits, got {len(chunks) * 6}",
            line,
            len(s) + 1,
        )
    bits = []
    for k, ch in enumerate(chunks):
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", line, pos + k + 1)
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    if any(bits[need:]):
        raise ParseError("nonzero padding bits in graph6 payload", line, len(s))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge-list I/O


def parse_edgelist(text: str) -> MultiGraph:
    """Whitespace-separated `u v` pairs, optional `u v k` multiplicity.
    A lone `v` token line declares an isolated vertex.  '#' starts a comment."""
    triples: list[tuple[int, int, int]] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if not tokens:
            continue
        values = []
        col = 1
        for tok in tokens:
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"expected an integer, got {tok!r}", lineno, body.find(tok) + 1)
            col += len(tok) + 1
        if len(values) == 1:
            (v,) = values
            if v < 0:
                raise ParseError("vertex indices must be nonnegative", lineno, 1)
            max_seen = max(max_seen, v)
            continue
        if len(values) not in (2, 3):
            raise ParseError(f"expected `u v` or `u v k`, got {len(values)} fields", lineno, 1)
        u, v = values[0], values[1]
        k = values[2] if len(values) == 3 else 1
        if u < 0 or v < 0:
            raise ParseError("vertex indices must be nonnegative", lineno, 1)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, 1)
        if k < 1:
            raise ParseError(f"multiplicity {k} must be positive", lineno, 1)
        triples.append((u, v, k))
        max_seen = max(max_seen, u, v)
    if max_seen < 0:
        raise ParseError("no vertices found", 1, 1)
    return MultiGraph.from_multi_edges(max_seen + 1, triples)


def emit_edgelist(d: MultiGraph | SimpleGraph) -> str:
    if isinstance(d, SimpleGraph):
        d = MultiGraph(d.n, tuple((u, v, 1) for u, v in d.edges()))
    lines = []
    covered = 0
    for u, v, m in d.edges:
        lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
        covered |= (1 << u) | (1 << v)
    for v in range(d.n):
        if not (covered >> v) & 1:
            lines.append(str(v))
    return "\n".join(lines) + "\n"


def emit_dot(d: MultiGraph | SimpleGraph, name: str = "g") -> str:
    if isinstance(d, SimpleGraph):
        d = MultiGraph(d.n, tuple((u, v, 1) for u, v in d.edges()))
    lines = [f"graph {name} {{"]
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v, m in d.edges:
        for _ in range(m):
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph_auto(text: str) -> list[MultiGraph]:
    """Parse a whole input: one graph6 code per line, or a single edge list.

    Heuristic: if every nonempty line parses as graph6 it is a graph6 stream;
    otherwise the whole text is an edge list.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1, 1)
    try:
        graphs = [parse_graph6(ln, lineno) for lineno, ln in enumerate(lines, start=1)]
        return [MultiGraph(g.n, tuple((u, v, 1) for u, v in g.edges())) for g in graphs]
    except ParseError:
        return [parse_edgelist(text)]


def simple_from_multigraph(d: MultiGraph) -> SimpleGraph:
    if any(m > 1 for _, _, m in d.edges):
        raise GraphError("input has multiplicities > 1 where a simple graph is required")
    return d.underlying_simple()
