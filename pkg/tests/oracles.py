"""Independent oracles used by the test suite: brute-force enumerations and
from-scratch constructions that the library code must agree with."""

import itertools

from stardom.digraph import OrientedGraph
from stardom.domination import is_wced


def brute_triangles(G):
    """Directed 3-cycles by scanning all ordered vertex triples."""
    tris = set()
    for a, b, c in itertools.permutations(range(G.vertex_count), 3):
        if G.has_arc(a, b) and G.has_arc(b, c) and G.has_arc(c, a) and a == min(a, b, c):
            tris.add((a, b, c))
    return sorted(tris)


def brute_wceds(G):
    """All worst-case efficient dominating sets by testing every subset."""
    n = G.vertex_count
    return tuple(sorted(
        tuple(sorted(c))
        for k in range(n + 1)
        for c in itertools.combinations(range(n), k)
        if is_wced(G, c).ok))


def cube_line_graph():
    """The cuboctahedron, built independently as the line graph of the
    3-dimensional binary cube."""
    corners = list(itertools.product((0, 1), repeat=3))
    edges = []
    for a in corners:
        for k in range(3):
            b = list(a)
            b[k] ^= 1
            b = tuple(b)
            if a < b:
                edges.append((a, b))
    arcs = []
    for x, e in enumerate(edges):
        for y, f in enumerate(edges):
            if x != y and set(e) & set(f):
                arcs.append((x, y))
    return OrientedGraph(range(len(edges)), arcs, family_tag="cube-line",
                         undirected=True)
