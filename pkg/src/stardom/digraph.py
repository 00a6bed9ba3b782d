"""Oriented-graph storage and the structural primitives shared by every
predicate: boundary sets, stability, connectivity, triangle enumeration,
vertex-map classification, double covers, isomorphism search, path
directification, and text export.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Optional, Sequence


class OrientedGraph:
    """Digraph with sorted adjacency, immutable after construction.

    Directed families are loop-free with no 2-cycles (validate_oriented
    enforces this); undirected graphs are stored as symmetric arc pairs with
    the `undirected` flag set.  Vertex ids index into `labels`.
    """

    __slots__ = ("labels", "out_adj", "in_adj", "family_tag", "undirected",
                 "arc_gen", "_arcs", "_ids")

    def __init__(
        self,
        labels: Iterable[Hashable],
        arcs: Iterable[tuple[int, int]],
        family_tag: str = "",
        undirected: bool = False,
        arc_gen: Optional[Mapping[tuple[int, int], int]] = None,
    ):
        self.labels = tuple(labels)
        n = len(self.labels)
        self._ids = {lab: k for k, lab in enumerate(self.labels)}
        if len(self._ids) != n:
            raise ValueError("duplicate vertex labels")
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.out_adj = tuple(tuple(sorted(x)) for x in out)
        self.in_adj = tuple(tuple(sorted(x)) for x in inn)
        self._arcs = frozenset(seen)
        self.family_tag = family_tag
        self.undirected = undirected
        self.arc_gen = dict(arc_gen) if arc_gen else None

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self._arcs)

    def vertex_id(self, label: Hashable) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise KeyError(f"no vertex labeled {label!r} in {self.family_tag or 'graph'}")

    def label_text(self, v: int) -> str:
        lab = self.labels[v]
        if isinstance(lab, tuple) and all(isinstance(x, int) for x in lab):
            return "".join(str(x) for x in lab)
        if isinstance(lab, tuple):
            return "/".join(self.__class__._text(x) for x in lab)
        return str(lab)

    @staticmethod
    def _text(x) -> str:
        if isinstance(x, tuple) and all(isinstance(c, int) for c in x):
            return "".join(str(c) for c in x)
        return str(x)

    def validate_oriented(self) -> None:
        """Raise unless the graph is an oriented simple graph (no 2-cycles)."""
        for u, v in self._arcs:
            if (v, u) in self._arcs:
                raise ValueError(f"2-cycle between {u} and {v}")

    def induced(self, vertices: Iterable[int], family_tag: str = "") -> "OrientedGraph":
        """Subdigraph induced on the given vertices, labels preserved."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        remap = {v: k for k, v in enumerate(vs)}
        arcs = [(remap[u], remap[v]) for u in vs for v in self.out_adj[u] if v in remap]
        gen = None
        if self.arc_gen is not None:
            gen = {(remap[u], remap[v]): g for (u, v), g in self.arc_gen.items()
                   if u in remap and v in remap}
        return OrientedGraph([self.labels[v] for v in vs], arcs,
                             family_tag or f"{self.family_tag}[{len(vs)}]",
                             undirected=self.undirected, arc_gen=gen)

    def underlying(self) -> "OrientedGraph":
        """Underlying undirected graph as symmetric arc pairs."""
        arcs = set()
        for u, v in self._arcs:
            arcs.add((u, v))
            arcs.add((v, u))
        return OrientedGraph(self.labels, sorted(arcs),
                             family_tag=f"{self.family_tag}~und", undirected=True)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self.labels):
            raise ValueError(f"vertex id {v} outside 0..{len(self.labels) - 1}")


def as_vertex_set(G: OrientedGraph, S: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a sorted tuple of valid vertex ids."""
    vs = sorted(set(S))
    for v in vs:
        G._check_vertex(v)
    return tuple(vs)


def set_from_words(G: OrientedGraph, words: Iterable) -> tuple[int, ...]:
    return as_vertex_set(G, (G.vertex_id(w) for w in words))


def boundary_sets(G: OrientedGraph, S: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(plus_boundary, minus_boundary) of S.

    The plus boundary holds the outside vertices that receive an arc from S
    (they are (+)dominated); the minus boundary holds the outside vertices
    that send an arc into S (they are (-)dominated).
    """
    s = set(as_vertex_set(G, S))
    plus = {v for u in s for v in G.out_adj[u] if v not in s}
    minus = {u for v in s for u in G.in_adj[v] if u not in s}
    return tuple(sorted(plus)), tuple(sorted(minus))


def is_stable(G: OrientedGraph, S: Iterable[int]) -> bool:
    """True iff no arc in either direction joins two members of S."""
    s = set(as_vertex_set(G, S))
    return not any(v in s for u in s for v in G.out_adj[u])


def is_pm_stable(G: OrientedGraph, S: Iterable[int]) -> bool:
    """True iff every member of S is a source, a sink, or isolated in the
    induced subdigraph (equivalently: the induced subdigraph is a dag of
    depth at most 1)."""
    s = set(as_vertex_set(G, S))
    for v in s:
        has_in = any(u in s for u in G.in_adj[v])
        has_out = any(u in s for u in G.out_adj[v])
        if has_in and has_out:
            return False
    return True


def strongly_connected(G: OrientedGraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    n = G.vertex_count
    if n <= 1:
        return True
    # iterative Tarjan; counts components and stops caring past the first two
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    components = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(G.out_adj[v])):
                w = G.out_adj[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                components += 1
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    if w == v:
                        break
    return components == 1


def weak_components(G: OrientedGraph) -> list[tuple[int, ...]]:
    """Weakly-connected components as sorted vertex tuples, sorted by least id."""
    n = G.vertex_count
    seen = [False] * n
    comps = []
    for root in range(n):
        if seen[root]:
            continue
        comp = []
        frontier = [root]
        seen[root] = True
        while frontier:
            v = frontier.pop()
            comp.append(v)
            for w in G.out_adj[v] + G.in_adj[v]:
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def directed_triangles(G: OrientedGraph) -> list[tuple[int, int, int]]:
    """Every directed 3-cycle, once each, rotated so the least id leads;
    the list is sorted lexicographically."""
    tris = []
    for u in range(G.vertex_count):
        for v in G.out_adj[u]:
            for w in G.out_adj[v]:
                if w != u and u < v and u < w and G.has_arc(w, u):
                    tris.append((u, v, w))
    return sorted(tris)


def triangles_through(G: OrientedGraph) -> list[int]:
    """Number of directed triangles through each vertex."""
    count = [0] * G.vertex_count
    for a, b, c in directed_triangles(G):
        count[a] += 1
        count[b] += 1
        count[c] += 1
    return count


@dataclass(frozen=True)
class MapClassification:
    """Orientation behavior of a vertex map between two graphs.

    kind is "plus_map" when arcs are preserved, "minus_map" when reversed,
    "neither" otherwise; inclusive means the image is induced with exactly
    the corresponding arcs.  When the domain has no arcs the direction is
    undecidable from the graphs alone: kind defaults to "plus_map" and
    vacuous is set.
    """
    kind: str
    injective: bool
    inclusive: bool
    vacuous: bool = False


def classify_vertex_map(G: OrientedGraph, H: OrientedGraph,
                        m: Sequence[int] | Mapping[int, int]) -> MapClassification:
    """Classify a total vertex map m from G into H."""
    images = [m[u] for u in range(G.vertex_count)]
    for v in images:
        H._check_vertex(v)
    injective = len(set(images)) == G.vertex_count
    garcs = G.arcs()
    plus_ok = all(H.has_arc(images[u], images[v]) for u, v in garcs)
    minus_ok = all(H.has_arc(images[v], images[u]) for u, v in garcs)
    vacuous = not garcs
    if not injective:
        return MapClassification("neither", False, False, vacuous)
    if vacuous:
        kind = "plus_map"
    elif plus_ok and not minus_ok:
        kind = "plus_map"
    elif minus_ok and not plus_ok:
        kind = "minus_map"
    elif plus_ok and minus_ok:
        kind = "plus_map"  # only possible when H carries symmetric pairs
    else:
        kind = "neither"
    inclusive = False
    if kind != "neither":
        image_set = set(images)
        internal = sum(1 for a in image_set for b in H.out_adj[a] if b in image_set)
        inclusive = internal == len(garcs) * (2 if (plus_ok and minus_ok and garcs) else 1)
    return MapClassification(kind, injective, inclusive, vacuous)


def canonical_double_cover(G: OrientedGraph) -> OrientedGraph:
    """Bipartite 2-lift: each arc (u, v) becomes arcs across the two layers,
    ((u,0),(v,1)) and ((u,1),(v,0))."""
    labels = []
    for lab in G.labels:
        labels.append((lab, 0))
        labels.append((lab, 1))
    arcs = []
    for u, v in G.arcs():
        arcs.append((2 * u, 2 * v + 1))
        arcs.append((2 * u + 1, 2 * v))
    return OrientedGraph(labels, arcs, family_tag=f"cover({G.family_tag})",
                         undirected=G.undirected)


def _color_histogram(colors: list[int]) -> dict[int, int]:
    h: dict[int, int] = {}
    for c in colors:
        h[c] = h.get(c, 0) + 1
    return h


def _match_order(G: OrientedGraph, colors: list[int]) -> list[int]:
    """Vertex order for backtracking: expand along adjacency, rarest color first."""
    n = G.vertex_count
    hist = _color_histogram(colors)
    placed: list[int] = []
    in_order = [False] * n
    adjacency_score = [0] * n
    while len(placed) < n:
        best = None
        for v in range(n):
            if in_order[v]:
                continue
            key = (-adjacency_score[v], hist[colors[v]], v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        placed.append(v)
        in_order[v] = True
        for w in G.out_adj[v] + G.in_adj[v]:
            if not in_order[w]:
                adjacency_score[w] += 1
    return placed


def isomorphic(G: OrientedGraph, H: OrientedGraph) -> Optional[dict[int, int]]:
    """Arc-exact isomorphism witness from G onto H, or None.

    Backtracking over a connectivity-driven vertex order with color
    refinement on (out-degree, in-degree, triangle count); deterministic.
    """
    if G.vertex_count != H.vertex_count or G.arc_count != H.arc_count:
        return None
    if G.undirected != H.undirected:
        return None
    sig_g, sig_h = _joint_colors(G, H)
    if sig_g is None:
        return None
    order = _match_order(G, sig_g)
    by_color: dict[int, list[int]] = {}
    for v in range(H.vertex_count):
        by_color.setdefault(sig_h[v], []).append(v)

    mapping: dict[int, int] = {}
    used = [False] * H.vertex_count

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        for cand in by_color.get(sig_g[u], ()):
            if used[cand]:
                continue
            ok = True
            for w, mw in mapping.items():
                if (G.has_arc(u, w) != H.has_arc(cand, mw)
                        or G.has_arc(w, u) != H.has_arc(mw, cand)):
                    ok = False
                    break
            if ok:
                mapping[u] = cand
                used[cand] = True
                if extend(k + 1):
                    return True
                used[cand] = False
                del mapping[u]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def _joint_colors(G: OrientedGraph, H: OrientedGraph):
    """Refine both graphs against a shared palette so colors are comparable."""
    tri_g = triangles_through(G)
    tri_h = triangles_through(H)
    base_g = [(len(G.out_adj[v]), len(G.in_adj[v]), tri_g[v]) for v in range(G.vertex_count)]
    base_h = [(len(H.out_adj[v]), len(H.in_adj[v]), tri_h[v]) for v in range(H.vertex_count)]
    palette = {c: k for k, c in enumerate(sorted(set(base_g) | set(base_h)))}
    cur_g = [palette[c] for c in base_g]
    cur_h = [palette[c] for c in base_h]
    for _ in range(G.vertex_count):
        sig_g = [(cur_g[v], tuple(sorted(cur_g[w] for w in G.out_adj[v])),
                  tuple(sorted(cur_g[w] for w in G.in_adj[v]))) for v in range(G.vertex_count)]
        sig_h = [(cur_h[v], tuple(sorted(cur_h[w] for w in H.out_adj[v])),
                  tuple(sorted(cur_h[w] for w in H.in_adj[v]))) for v in range(H.vertex_count)]
        palette = {c: k for k, c in enumerate(sorted(set(sig_g) | set(sig_h)))}
        nxt_g = [palette[c] for c in sig_g]
        nxt_h = [palette[c] for c in sig_h]
        if _color_histogram(nxt_g) != _color_histogram(nxt_h):
            return None, None
        if len(set(nxt_g)) == len(set(cur_g)):
            return nxt_g, nxt_h
        cur_g, cur_h = nxt_g, nxt_h
    return cur_g, cur_h


@dataclass(frozen=True)
class CopySearch:
    """Induced-copy enumeration result: one witness per distinct image set."""
    image_sets: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[int, ...], ...]  # witness[k][u] = image of pattern vertex u
    complete: bool


def enumerate_induced_copies(H: OrientedGraph, G: OrientedGraph,
                             budget: Optional[float] = None) -> CopySearch:
    """All induced embeddings of H into G, deduplicated by image vertex set.

    Anchored backtracking: a fixed directed triangle of H is mapped onto
    each directed triangle of G (all rotations), then the map is extended
    with arc- and non-arc-exact candidate checks.  A wall-clock budget turns
    an exhaustive run into a flagged partial one.
    """
    if H.vertex_count > G.vertex_count:
        return CopySearch((), (), True)
    deadline = time.monotonic() + budget if budget is not None else None
    htris = directed_triangles(H)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    complete = True

    order: list[int] = []
    if htris:
        order = list(htris[0])
    seen = set(order)
    # extend the order along adjacency for strong pruning
    while len(order) < H.vertex_count:
        best = None
        for v in range(H.vertex_count):
            if v in seen:
                continue
            score = sum(1 for w in H.out_adj[v] + H.in_adj[v] if w in seen)
            key = (-score, v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        seen.add(best[1])

    mapping: dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        """Returns False when the budget ran out."""
        nonlocal complete
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            return False
        if k == len(order):
            image = tuple(sorted(mapping.values()))
            if image not in found:
                found[image] = tuple(mapping[u] for u in range(H.vertex_count))
            return True
        u = order[k]
        mapped_neighbors = [w for w in order[:k]]
        for cand in range(G.vertex_count):
            if cand in used:
                continue
            if len(G.out_adj[cand]) < len(H.out_adj[u]) or len(G.in_adj[cand]) < len(H.in_adj[u]):
                continue
            ok = True
            for w in mapped_neighbors:
                mw = mapping[w]
                if (H.has_arc(u, w) != G.has_arc(cand, mw)
                        or H.has_arc(w, u) != G.has_arc(mw, cand)):
                    ok = False
                    break
            if ok:
                mapping[u] = cand
                used.add(cand)
                alive = extend(k + 1)
                used.discard(cand)
                del mapping[u]
                if not alive:
                    return False
        return True

    if htris:
        anchor = htris[0]
        gtris = directed_triangles(G)
        alive = True
        for tri in gtris:
            if not alive:
                break
            for rot in range(3):
                rtri = (tri[rot], tri[(rot + 1) % 3], tri[(rot + 2) % 3])
                mapping.clear()
                used.clear()
                consistent = True
                for hu, gu in zip(anchor, rtri):
                    mapping[hu] = gu
                    used.add(gu)
                # anchor triangles already arc-consistent by construction
                alive = extend(3)
                if not alive:
                    break
        mapping.clear()
        used.clear()
    else:
        extend(0)

    images = tuple(sorted(found))
    return CopySearch(images, tuple(found[s] for s in images), complete)


def triangle_detours(G: OrientedGraph) -> dict[tuple[int, int], int]:
    """For each arc (a, b): the least vertex c closing a directed triangle
    a -> b -> c -> a.  Raises when some arc lies in no directed triangle."""
    third: dict[tuple[int, int], int] = {}
    for a, b, c in directed_triangles(G):
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            if (u, v) not in third or third[(u, v)] > w:
                third[(u, v)] = w
    missing = [arc for arc in G.arcs() if arc not in third]
    if missing:
        raise ValueError(f"{len(missing)} arcs lie in no directed triangle, e.g. {missing[0]}")
    return third


def directify_path(G: OrientedGraph, path: Sequence[int]) -> list[int]:
    """Turn an undirected walk into a directed walk with the same endpoints.

    Forward hops are kept; a backward traversal of arc (a, b) is replaced by
    the two-arc detour b -> c -> a through a directed triangle containing
    (a, b).  Requires every arc of G to lie in a directed triangle.
    """
    third = triangle_detours(G)
    if not path:
        return []
    walk = [path[0]]
    for a, b in zip(path, path[1:]):
        if G.has_arc(a, b):
            walk.append(b)
        elif G.has_arc(b, a):
            c = third[(b, a)]
            walk.extend([c, b])
        else:
            raise ValueError(f"no arc joins {a} and {b} in either direction")
    return walk


def export_graph(G: OrientedGraph, format: str) -> str:
    """Serialize to "dot", "edges" (header plus id pairs), or "json"."""
    if format == "dot":
        if G.undirected:
            lines = ["graph {"]
            for u, v in G.arcs():
                if u < v:
                    lines.append(f'  "{G.label_text(u)}" -- "{G.label_text(v)}";')
        else:
            lines = ["digraph {"]
            for u, v in G.arcs():
                lines.append(f'  "{G.label_text(u)}" -> "{G.label_text(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "edges":
        lines = [f"vertices {G.vertex_count}"]
        lines.extend(f"{u} {v}" for u, v in G.arcs())
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = {
            "schema": "stardom/1",
            "kind": "graph",
            "family_tag": G.family_tag,
            "undirected": G.undirected,
            "vertex_count": G.vertex_count,
            "labels": [G.label_text(v) for v in range(G.vertex_count)],
            "arcs": [[u, v] for u, v in G.arcs()],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unsupported format {format!r}")


def parse_graph(text: str, format: str) -> OrientedGraph:
    """Inverse of export_graph for the "edges" and "json" formats."""
    if format == "edges":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("vertices "):
            raise ValueError("edges format needs a 'vertices N' header")
        n = int(lines[0].split()[1])
        arcs = []
        for ln in lines[1:]:
            u, v = ln.split()
            arcs.append((int(u), int(v)))
        return OrientedGraph(range(n), arcs)
    if format == "json":
        payload = json.loads(text)
        return OrientedGraph(
            payload["labels"],
            [tuple(a) for a in payload["arcs"]],
            family_tag=payload.get("family_tag", ""),
            undirected=payload.get("undirected", False),
        )
    raise ValueError(f"unsupported format {format!r}")


def vertex_set_digest(G: OrientedGraph, S: Iterable[int]) -> str:
    """Stable hash of a vertex set, used when reports omit full witnesses."""
    text = ",".join(G.label_text(v) for v in as_vertex_set(G, S))
    return hashlib.sha256(text.encode()).hexdigest()[:16]
