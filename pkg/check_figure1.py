# Dev script: transcribe the paper's Figure 1 tikz, dedup, compare with the BFS class.
from fractions import Fraction

from rootline import graphkit as gk, mutation as mu


def build(verts, strokes):
    """verts: list of (x, y); strokes: list of polylines (lists of points).
    A vertex lying strictly inside a segment splits it."""
    pts = [(Fraction(x).limit_denominator(100), Fraction(y).limit_denominator(100)) for x, y in verts]
    idx = {p: i for i, p in enumerate(pts)}
    edges = set()
    for poly in strokes:
        poly = [(Fraction(x).limit_denominator(100), Fraction(y).limit_denominator(100)) for x, y in poly]
        for (x1, y1), (x2, y2) in zip(poly, poly[1:]):
            # gather vertices on the segment, sorted along it
            on = []
            for p in pts:
                px, py = p
                # collinear and within bbox
                if (x2 - x1) * (py - y1) != (y2 - y1) * (px - x1):
                    continue
                if min(x1, x2) <= px <= max(x1, x2) and min(y1, y2) <= py <= max(y1, y2):
                    on.append(p)
            key = (lambda p: (p[0], p[1])) if x1 != x2 or True else None
            on.sort(key=lambda p: ((p[0] - x1) ** 2 + (p[1] - y1) ** 2))
            assert on[0] == (x1, y1) and on[-1] == (x2, y2), (poly, on)
            for a, b in zip(on, on[1:]):
                e = tuple(sorted((idx[a], idx[b])))
                edges.add(e)
    return gk.SimpleGraph.from_edges(len(pts), sorted(edges))


figs = {}
figs[1] = build([(0,0),(1,0),(2,0),(2,1),(3,0),(4,0)], [[(0,0),(4,0)],[(2,0),(2,1)]])
figs[2] = build([(5,0),(5,1),(6,1),(6,2),(7,1),(7,0)], [[(7,0),(5,0),(5,1),(7,1),(7,0)],[(6,1),(6,2)]])
figs[3] = build([(8,0),(9,0),(10,0),(8,1),(9,1),(10,1)], [[(8,0),(10,0)],[(8,0),(8,1),(10,1)],[(9,0),(9,1)]])
figs[4] = build([(11,0),(12,0),(13,0),(14,0),(12.5,1),(13.5,1)], [[(11,0),(14,0)],[(13,0),(12.5,1),(13.5,1),(13,0)]])
figs[5] = build([(16,0),(17,0),(18,0),(16,1),(17,1),(18,1)], [[(16,0),(18,0),(18,1),(16,1),(16,0)],[(17,0),(17,1)]])
figs[6] = build([(19,0),(20,0),(19.5,2),(20,1),(21,0),(19,1)], [[(19,0),(20,0),(20,1),(19,1),(19,0)],[(19,1),(19.5,2),(20,1)],[(20,0),(21,0)]])
figs[7] = build([(22,0),(23,0),(22.5,2),(23,1),(24,1),(22,1)], [[(22,0),(23,0),(23,1),(22,1),(22,0)],[(22,1),(22.5,2),(23,1)],[(23,1),(24,1)]])
figs[8] = build([(25,1),(26,1),(26.5,2),(26.5,0),(27,1),(28,1)], [[(25,1),(26,1),(26.5,2),(26.5,0),(27,1),(28,1)],[(26,1),(26.5,0)],[(26.5,2),(27,1)]])
figs[9] = build([(29,0),(29,1),(30,0),(31,0),(31,1),(30,1)], [[(29,0),(31,0)],[(29,0),(29,1),(30,0),(31,1),(31,0)],[(30,0),(30,1)]])
figs[10] = build([(32,0),(33,0),(34,0),(35,0),(33,1),(34,1)], [[(32,0),(35,0)],[(33,0),(33,1),(34,1),(34,0),(33,1)]])
figs[11] = build([(0,0),(2,0),(0,1),(2,1),(1,1),(1,2)], [[(0,0),(2,0),(2,1),(1,2),(0,1),(0,0)],[(0,0),(1,1),(2,0)],[(1,1),(1,2)]])
figs[12] = build([(3,0),(5,0),(3,1),(5,1),(4,1),(4,2)], [[(3,0),(5,0),(5,1),(4,2),(3,1),(3,0)],[(4,1),(4,2)],[(3,1),(5,1)]])
figs[13] = build([(6,0),(7,0),(8,0),(6,1),(7,1),(8,1)], [[(6,0),(8,0),(8,1),(6,1),(6,0),(7,1),(7,0)]])
figs[14] = build([(9,1),(10,1),(11,1),(12,1),(10,2),(10,0)], [[(12,1),(9,1),(10,0),(11,1)],[(10,0),(10,1)],[(9,1),(10,2),(11,1)]])
figs[15] = build([(13,1),(14,1),(15,1),(16,1),(14,2),(14,0)], [[(16,1),(14,1)],[(14,0),(14,2)],[(13,1),(14,2),(15,1)],[(13,1),(14,0),(15,1)]])
figs[16] = build([(17,1),(18,1),(19,1),(17,0),(19,0),(20,0)], [[(17,1),(19,1)],[(17,0),(20,0)],[(17,0),(17,1)],[(17,0),(18,1)],[(19,0),(18,1)],[(19,0),(19,1)]])
figs[17] = build([(21,1),(22,1),(23,1),(21,0),(23,0),(22,2)], [[(21,1),(23,1)],[(21,0),(23,0)],[(21,0),(21,1)],[(21,0),(22,1)],[(23,0),(22,1)],[(22,1),(22,2)],[(23,0),(23,1)]])
figs[18] = build([(24,2),(24,0),(26,0),(26,2),(25,1),(27,1)], [[(24,2),(24,0),(26,0),(26,2),(24,2)],[(24,2),(26,0)],[(24,0),(25,1)],[(26,2),(27,1),(26,0)]])
figs[19] = build([(28,2),(28,0),(30,0),(30,2),(29,1),(31,1)], [[(28,2),(28,0),(30,0),(30,2),(28,2)],[(28,2),(30,0)],[(30,2),(29,1)],[(30,2),(31,1),(30,0)]])
figs[20] = build([(32,0.5),(33,0),(34,0),(35,0.5),(33,1),(34,1)], [[(32,0.5),(33,0),(34,0),(35,0.5),(34,1),(33,1),(32,0.5)],[(33,0),(34,1)],[(33,0),(33,1)],[(34,0),(34,1)]])
figs[21] = build([(-5,1),(-4,0),(-3,0),(-2,1),(-3,2),(-4,2)], [[(-5,1),(-4,0),(-3,0),(-2,1),(-3,2),(-4,2),(-5,1)],[(-5,1),(-3,0)],[(-5,1),(-2,1)],[(-5,1),(-3,2)],[(-5,1),(-4,2)]])
figs[22] = build([(0,0.5),(1,0.5),(2,0),(2,1),(3,0.5),(4,0.5)], [[(0,0.5),(1,0.5),(2,0),(2,1),(1,0.5)],[(0,0.5),(2,1),(3,0.5),(4,0.5)],[(0,0.5),(2,0),(3,0.5)]])
figs[23] = build([(5,0.5),(6,0.5),(7,0),(7,1),(8,0.5),(7,2)], [[(5,0.5),(6,0.5),(7,0),(7,1),(6,0.5)],[(5,0.5),(7,1),(8,0.5)],[(7,1),(7,2)],[(5,0.5),(7,0),(8,0.5)]])
figs[24] = build([(9,1),(10,0),(11,0),(12,1),(11,2),(10,2)], [[(9,1),(10,0),(11,0),(12,1),(11,2),(10,2),(9,1)],[(10,0),(10,2)],[(11,0),(11,2)],[(9,1),(11,0)],[(12,1),(10,0)]])
figs[25] = build([(13,1),(14,0),(15,0),(16,1),(14.5,2),(14.5,1)], [[(13,1),(14,0),(15,0),(16,1),(14.5,2),(13,1),(14.5,1),(14,0)],[(15,0),(14.5,1),(16,1)],[(14.5,2),(14.5,1)]])
figs[26] = build([(17,0),(17,2),(18,1),(19,1),(20,1),(21,1)], [[(17,0),(17,2),(21,1),(18,1),(17,0),(18,1),(17,2)],[(21,1),(17,0),(19,1),(17,2)]])
figs[27] = build([(22,1),(23,0),(24,0),(25,1),(23.5,2),(23.5,1)], [[(22,1),(23,0),(24,0),(25,1),(23.5,2),(22,1)],[(23.5,2),(24,0),(23.5,1)],[(23.5,2),(23,0),(23.5,1)],[(23.5,2),(23.5,1)]])
figs[28] = build([(-5,0),(-5,2),(-4,1),(-3,1),(-2,1),(-1,1)], [[(-5,0),(-5,2),(-4,1),(-5,0)],[(-4,1),(-1,1)],[(-5,0),(-4,1),(-5,2)],[(-5,0),(-3,1),(-5,2)],[(-5,0),(-2,1),(-5,2)]])
figs[29] = build([(0,1),(1,0),(2,0),(3,1),(2,2),(1,2)], [[(0,1),(1,0),(2,0),(3,1),(2,2),(1,2),(0,1)],[(1,0),(1,2)],[(2,0),(2,2)],[(1,2),(2,0)],[(2,2),(1,0)],[(0,1),(3,1)]])
figs[30] = build([(4,1),(5,1),(6,2),(6,0),(7,1),(8,1)], [[(4,1),(6,2),(8,1),(6,0)],[(4,1),(5,1),(6,2),(7,1),(8,1)],[(5,1),(6,0),(7,1)],[(4,1),(6,0),(6,2)]])
figs[31] = build([(9,1),(10,2),(10,0),(11,0.7),(11,1.3),(12.5,1)], [[(9,1),(10,2),(12.5,1),(10,0),(9,1)],[(10,0),(10,2),(11,1.3),(11,0.7),(10,0),(11,1.3)],[(11,1.3),(12.5,1),(11,0.7)]])
figs[32] = build([(14,1),(15,1),(16,2),(16,0),(17,1),(18,1)], [[(14,1),(16,2),(18,1),(16,0)],[(14,1),(15,1),(16,2),(17,1),(18,1)],[(15,1),(16,0),(17,1)],[(14,1),(16,0),(16,2)],[(15,1),(17,1)]])
figs[33] = build([(19,1),(20,0),(21,0),(22,1),(21,2),(20,2)], [[(19,1),(20,0),(21,0),(22,1),(21,2),(20,2),(19,1)],[(19,1),(22,1)],[(20,0),(21,2)],[(21,0),(20,2)],[(20,0),(20,2)],[(19,1),(21,0)],[(22,1),(20,2)],[(20,0),(22,1)]])

forms = {}
for i, g in sorted(figs.items()):
    c = gk.canonical(g)
    forms.setdefault(c, []).append(i)
    print(f"E6^({i}): edges={g.edge_count()} degs={g.degree_sequence()} connected={g.is_connected()}")

print()
dups = {c: idxs for c, idxs in forms.items() if len(idxs) > 1}
print("duplicate figure entries:", dups and {tuple(v) for v in dups.values()})
print("distinct figure classes:", len(forms))

cls = mu.equivalence_class(gk.named_graph("E", 6))
fig_set = set(forms)
print("figure classes missing from BFS class:", [forms[c] for c in fig_set - cls])
print("BFS classes missing from figure:", len(cls - fig_set))
for c in cls - fig_set:
    g = c.to_graph()
    print("  ", g.edge_count(), g.degree_sequence(), list(g.edges()))
