"""Constructors for every graph family the toolkit handles: star graphs and
star digraphs, their embedded copies and guard stars, pancake and binary-star
digraphs, and oriented ternary Hamming cubes.

Constructors are cached; resulting graphs are immutable and shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .digraph import OrientedGraph, classify_vertex_map
from .perms import (
    Word,
    all_words,
    apply_star_gen,
    embed_orientation,
    even_words,
    insert_embed,
    is_even,
    word_to_text,
)

FAMILY_CODES = ("st", "std", "pc", "pcx", "bst", "tc")


@dataclass(frozen=True)
class FamilySpec:
    """Addressable family: code, size parameter, and (ternary cubes only)
    the orientation rule."""
    family: str
    n: int
    orientation: str = "cyclic"


def build_family(spec: FamilySpec) -> OrientedGraph:
    if spec.family == "st":
        return star_graph(spec.n)
    if spec.family == "std":
        return star_digraph(spec.n)
    if spec.family == "pc":
        return pancake_digraph(spec.n)
    if spec.family == "pcx":
        return pancake_crossed(spec.n)
    if spec.family == "bst":
        return binary_star_digraph(spec.n)
    if spec.family == "tc":
        return ternary_cube_oriented(spec.n, spec.orientation)
    raise ValueError(f"unknown family code {spec.family!r} (expected one of {FAMILY_CODES})")


@lru_cache(maxsize=None)
def star_graph(n: int) -> OrientedGraph:
    """Undirected star graph on all n! words: w is joined to the word with
    positions 0 and i swapped, for every i >= 1."""
    if not 2 <= n <= 8:
        raise ValueError(f"star graph degree {n} outside 2..8")
    words = all_words(n)
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    for k, w in enumerate(words):
        for i in range(1, n):
            y = list(w)
            y[0], y[i] = y[i], y[0]
            arcs.append((k, ids[tuple(y)]))
    return OrientedGraph(words, arcs, family_tag=f"st:{n}", undirected=True)


@lru_cache(maxsize=None)
def star_digraph(n: int) -> OrientedGraph:
    """Star digraph on the n!/2 even words; each generator index i in 2..n-1
    contributes the arc w -> apply_star_gen(w, i).  Arcs carry their
    generator index."""
    if not 2 <= n <= 8:
        raise ValueError(f"star digraph degree {n} outside 2..8")
    words = even_words(n)
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    gen: dict[tuple[int, int], int] = {}
    for k, w in enumerate(words):
        for i in range(2, n):
            t = ids[apply_star_gen(w, i)]
            arcs.append((k, t))
            gen[(k, t)] = i
    G = OrientedGraph(words, arcs, family_tag=f"std:{n}", arc_gen=gen)
    G.validate_oriented()
    return G


@dataclass(frozen=True)
class EmbeddingDescriptor:
    """One insertion embedding of a degree-n star digraph into degree n+1.

    `image` holds host vertex ids (always the even host words with symbol i
    at position j); `vertex_map[u]` is the host id of source vertex u.
    """
    n: int
    i: int
    j: int
    orientation_class: str
    image: tuple[int, ...]
    vertex_map: tuple[int, ...]

    def word_map(self) -> dict[Word, Word]:
        src = star_digraph(self.n)
        host = star_digraph(self.n + 1)
        return {src.labels[u]: host.labels[v] for u, v in enumerate(self.vertex_map)}


@lru_cache(maxsize=None)
def embedded_copy(n: int, i: int, j: int) -> EmbeddingDescriptor:
    """The (i, j) insertion-embedded copy of the degree-n star digraph inside
    the degree-(n+1) one, with its orientation class verified against the
    host graph."""
    if n + 1 > 8:
        raise ValueError(f"host degree {n + 1} outside supported range")
    src = star_digraph(n)
    host = star_digraph(n + 1)
    vmap = tuple(host.vertex_id(insert_embed(w, i, j)) for w in src.labels)
    orientation = embed_orientation(i, j)
    cls = classify_vertex_map(src, host, vmap)
    if not cls.inclusive:
        raise AssertionError(f"embedding ({n},{i},{j}) image is not induced")
    expected = "minus_map" if orientation == "minus" else "plus_map"
    if not cls.vacuous and cls.kind != expected:
        raise AssertionError(
            f"embedding ({n},{i},{j}) classified {cls.kind}, expected {expected}")
    return EmbeddingDescriptor(n, i, j, orientation, tuple(sorted(vmap)), vmap)


@dataclass(frozen=True)
class GuardStar:
    """Oriented star-graph copy inside a star digraph: the host vertices with
    a fixed symbol at position 0 or 1, with every induced arc running from
    the position-0 part to the position-1 part.

    At host degree 2 the single vertex is isolated and both parts may be
    empty or trivial.
    """
    host_degree: int
    symbol: int
    vertices: tuple[int, ...]
    source_part: tuple[int, ...]  # symbol at position 0
    sink_part: tuple[int, ...]    # symbol at position 1
    graph: OrientedGraph

    def words(self) -> list[Word]:
        host = star_digraph(self.host_degree)
        return [host.labels[v] for v in self.vertices]


@lru_cache(maxsize=None)
def guard_star(n_plus_1: int, i: int) -> GuardStar:
    """The guard star for symbol i inside the degree-n_plus_1 star digraph;
    its n! vertices form the canonical worst-case efficient dominating set."""
    if not 2 <= n_plus_1 <= 8:
        raise ValueError(f"host degree {n_plus_1} outside 2..8")
    if not 0 <= i <= n_plus_1 - 1:
        raise ValueError(f"guard symbol {i} outside 0..{n_plus_1 - 1}")
    host = star_digraph(n_plus_1)
    src = tuple(k for k, w in enumerate(host.labels) if w[0] == i)
    snk = tuple(k for k, w in enumerate(host.labels) if w[1] == i)
    vertices = tuple(sorted(src + snk))
    sub = host.induced(vertices, family_tag=f"guard:{n_plus_1},{i}")
    src_set = set(src)
    for u, v in sub.arcs():
        gu = vertices[u]
        gv = vertices[v]
        if gu not in src_set or gv in src_set:
            raise AssertionError("guard-star arc does not run source part -> sink part")
    if len(vertices) != factorial(n_plus_1 - 1):
        raise AssertionError("guard star has unexpected size")
    return GuardStar(n_plus_1, i, vertices, src, snk, sub)


def _pancake_succ(w: Word, i: int) -> Word:
    # y_0 = x_i, y_1 = x_0, middle block positions 2..i reversed, rest fixed
    return tuple([w[i], w[0]] + [w[i + 1 - k] for k in range(2, i + 1)] + list(w[i + 1:]))


@lru_cache(maxsize=None)
def pancake_digraph(n: int) -> OrientedGraph:
    """Pancake digraph on all n! words; generator i in 2..n-1 sends w to the
    word with the prefix 0..i reversed and the leading pair swapped back.

    For i in {2, 3} this action coincides with the star-digraph generators,
    which is what splits the degree-4 graph into two star-digraph
    components; from degree 5 on, generator 4 is odd and joins them.
    """
    if not 4 <= n <= 7:
        raise ValueError(f"pancake degree {n} outside 4..7")
    words = all_words(n)
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    gen: dict[tuple[int, int], int] = {}
    for k, w in enumerate(words):
        for i in range(2, n):
            t = ids[_pancake_succ(w, i)]
            arcs.append((k, t))
            gen[(k, t)] = i
    # calibration: generators 2 and 3 act exactly as the star generators
    probe = tuple(range(n))
    for i in (2, 3):
        if _pancake_succ(probe, i) != apply_star_gen(probe, i):
            raise AssertionError("pancake generator action miscalibrated")
    G = OrientedGraph(words, arcs, family_tag=f"pc:{n}", arc_gen=gen)
    G.validate_oriented()
    return G


def _swap23(w: Word) -> Word:
    return (w[0], w[1], w[3], w[2]) + w[4:]


@lru_cache(maxsize=None)
def pancake_crossed(n: int = 5) -> OrientedGraph:
    """Degree-5 pancake digraph built the long way round: two disjoint star
    digraphs (the second relabeled by swapping word positions 2 and 3, which
    carries it onto the odd words), with each pair of generator-4 arcs
    replaced by the crossed pair between the copies.

    The isomorphism with pancake_digraph(5) is asserted at construction.
    """
    if n != 5:
        raise ValueError("the crossed construction is specific to degree 5")
    base = star_digraph(5)
    words = all_words(5)
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    for (u, v), i in sorted(base.arc_gen.items()):
        wu, wv = base.labels[u], base.labels[v]
        if i != 4:
            arcs.append((ids[wu], ids[wv]))
            arcs.append((ids[_swap23(wu)], ids[_swap23(wv)]))
        else:
            # cross the heads of the two corresponding generator-4 arcs
            arcs.append((ids[wu], ids[_swap23(wv)]))
            arcs.append((ids[_swap23(wu)], ids[wv]))
    G = OrientedGraph(words, arcs, family_tag=f"pcx:{n}")
    G.validate_oriented()
    from .digraph import isomorphic  # deferred: avoids cost unless constructed
    if isomorphic(G, pancake_digraph(5)) is None:
        raise AssertionError("crossed construction is not isomorphic to the pancake digraph")
    return G


def crossed_arc_cycles(G: OrientedGraph) -> list[tuple[int, ...]]:
    """Cycles formed by the arcs that join the even and odd words of a
    crossed pancake construction (the replaced generator-4 families)."""
    succ = {}
    for u, v in G.arcs():
        if is_even(G.labels[u]) != is_even(G.labels[v]):
            if u in succ:
                raise AssertionError("crossing arcs do not form a functional graph")
            succ[u] = v
    seen = set()
    cycles = []
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = succ[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = succ[v]
        cycles.append(tuple(cyc))
    return cycles


@lru_cache(maxsize=None)
def binary_star_digraph(n: int) -> OrientedGraph:
    """Bipartite variant on all n! words: even words send arcs by swapping
    entry positions 1 and i, odd words by swapping positions 0 and i, for
    each i in 2..n-1."""
    if not 3 <= n <= 7:
        raise ValueError(f"binary-star degree {n} outside 3..7")
    words = all_words(n)
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    for k, w in enumerate(words):
        pos = 1 if is_even(w) else 0
        for i in range(2, n):
            y = list(w)
            y[pos], y[i] = y[i], y[pos]
            arcs.append((k, ids[tuple(y)]))
    G = OrientedGraph(words, arcs, family_tag=f"bst:{n}")
    G.validate_oriented()
    for u, v in G.arcs():
        if is_even(G.labels[u]) == is_even(G.labels[v]):
            raise AssertionError("binary-star arc joins words of equal parity")
    return G


@lru_cache(maxsize=None)
def ternary_cube_oriented(m: int, orientation: str = "cyclic") -> OrientedGraph:
    """Oriented ternary Hamming cube on words of {0,1,2}^m; words differing
    in one coordinate are joined, oriented either linearly (toward the larger
    value) or cyclically (value + 1 mod 3).  Cyclic is in=out regular of
    degree m; linear is not regular."""
    if not 1 <= m <= 7:
        raise ValueError(f"ternary cube dimension {m} outside 1..7")
    if orientation not in ("linear", "cyclic"):
        raise ValueError(f"orientation must be 'linear' or 'cyclic', got {orientation!r}")
    import itertools
    words = list(itertools.product(range(3), repeat=m))
    ids = {w: k for k, w in enumerate(words)}
    arcs = []
    for k, w in enumerate(words):
        for c in range(m):
            for val in range(3):
                if val == w[c]:
                    continue
                y = list(w)
                y[c] = val
                if orientation == "linear":
                    forward = val > w[c]
                else:
                    forward = (val - w[c]) % 3 == 1
                if forward:
                    arcs.append((k, ids[tuple(y)]))
    G = OrientedGraph(words, arcs, family_tag=f"tc:{m}:{orientation}")
    G.validate_oriented()
    return G
