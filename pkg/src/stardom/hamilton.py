"""Directed Hamilton path and cycle search, the one/two-arc step-type
encoding of star-digraph paths, and an exploratory traceability survey.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .digraph import OrientedGraph
from .families import FamilySpec, build_family


@dataclass(frozen=True)
class HamiltonReport:
    """Search outcome: status is "found", "none" (exhausted without a hit),
    or "budget_exhausted"."""
    graph: str
    mode: str
    status: str
    witness: tuple[int, ...] = ()
    start: Optional[int] = None
    nodes_expanded: int = 0
    elapsed: float = 0.0

    def revalidate(self, G: OrientedGraph) -> bool:
        if self.status != "found":
            return True
        path = list(self.witness)
        if self.mode == "cycle":
            if len(path) != G.vertex_count or not G.has_arc(path[-1], path[0]):
                return False
        else:
            if len(path) != G.vertex_count:
                return False
        if len(set(path)) != len(path):
            return False
        return all(G.has_arc(a, b) for a, b in zip(path, path[1:]))


def _reaches_all(G: OrientedGraph, origin: int, unvisited: set[int]) -> bool:
    # directed reachability from origin across unvisited vertices only
    seen = {origin}
    frontier = [origin]
    remaining = len(unvisited)
    while frontier and remaining:
        v = frontier.pop()
        for w in G.out_adj[v]:
            if w not in seen and w in unvisited:
                seen.add(w)
                remaining -= 1
                frontier.append(w)
    return remaining == 0


def hamilton_search(G: OrientedGraph, mode: str = "cycle",
                    start: Optional[int] = None,
                    budget: Optional[float] = None) -> HamiltonReport:
    """Depth-first Hamilton search with connectivity and stranding pruning.

    Cycle mode fixes the start (any vertex lies on a cycle if one exists);
    path mode tries every start unless one is given.  Exhausting the search
    within the budget refutes existence; running out of budget is reported
    as its own status, never as "none".
    """
    if mode not in ("cycle", "path"):
        raise ValueError(f"mode must be 'cycle' or 'path', got {mode!r}")
    t0 = time.monotonic()
    deadline = t0 + budget if budget is not None else None
    n = G.vertex_count
    nodes = 0
    out_of_time = False

    def dfs(v: int, visited: set[int], trail: list[int], anchor: int) -> Optional[list[int]]:
        nonlocal nodes, out_of_time
        nodes += 1
        if deadline is not None and nodes % 16 == 0 and time.monotonic() > deadline:
            out_of_time = True
            return None
        if len(trail) == n:
            if mode == "path" or G.has_arc(v, anchor):
                return list(trail)
            return None
        unvisited = set(range(n)) - visited
        if not _reaches_all(G, v, unvisited):
            return None
        # vertices with no way onward must be the single final vertex
        stranded = 0
        for w in unvisited:
            onward = any(x in unvisited for x in G.out_adj[w])
            if mode == "cycle":
                if not onward and not G.has_arc(w, anchor):
                    return None
            elif not onward:
                stranded += 1
                if stranded > 1:
                    return None
        for w in G.out_adj[v]:
            if w in visited:
                continue
            visited.add(w)
            trail.append(w)
            hit = dfs(w, visited, trail, anchor)
            if hit is not None or out_of_time:
                return hit
            trail.pop()
            visited.remove(w)
        return None

    starts: Sequence[int]
    if mode == "cycle":
        starts = (start,) if start is not None else (0,) if n else ()
    else:
        starts = (start,) if start is not None else range(n)
    for s in starts:
        G._check_vertex(s)
        hit = dfs(s, {s}, [s], s)
        if hit is not None:
            return HamiltonReport(G.family_tag, mode, "found", tuple(hit), s,
                                  nodes, time.monotonic() - t0)
        if out_of_time:
            return HamiltonReport(G.family_tag, mode, "budget_exhausted", (), s,
                                  nodes, time.monotonic() - t0)
    return HamiltonReport(G.family_tag, mode, "none", (), start, nodes,
                          time.monotonic() - t0)


def encode_step_type(G: OrientedGraph, path: Sequence[int]) -> str:
    """Step-type string of a directed path in a generator-labeled digraph:
    scanning the arc labels left to right, two equal consecutive labels
    border one directed triangle and encode 'b' (consuming both), any other
    arc encodes 'a'.

    Three equal labels in a row would revisit a vertex (the generators have
    order 3), so runs have length at most 2 and the greedy parse is the
    run-length parse.
    """
    if G.arc_gen is None:
        raise ValueError("graph carries no generator labels")
    if len(set(path)) != len(path):
        raise ValueError("not a path: repeated vertex")
    labels = []
    for a, b in zip(path, path[1:]):
        if not G.has_arc(a, b):
            raise ValueError(f"not a directed path: no arc ({a},{b})")
        labels.append(G.arc_gen[(a, b)])
    for k in range(len(labels) - 2):
        if labels[k] == labels[k + 1] == labels[k + 2]:
            raise AssertionError("three consecutive arcs share a generator")
    out = []
    k = 0
    while k < len(labels):
        if k + 1 < len(labels) and labels[k] == labels[k + 1]:
            out.append("b")
            k += 2
        else:
            out.append("a")
            k += 1
    return "".join(out)


@dataclass(frozen=True)
class PathEnumeration:
    """All directed Hamilton paths from one start, with their type strings."""
    start: int
    paths: tuple[tuple[int, ...], ...]
    type_counts: dict[str, int]
    complete: bool
    elapsed: float


def enumerate_hamilton_paths(G: OrientedGraph, start: int,
                             budget: Optional[float] = None) -> PathEnumeration:
    """Every directed Hamilton path from `start`, each encoded; graphs on
    more than 24 vertices require a budget."""
    n = G.vertex_count
    if n > 24 and budget is None:
        raise ValueError(f"exhaustive enumeration on {n} > 24 vertices needs a budget")
    G._check_vertex(start)
    t0 = time.monotonic()
    deadline = t0 + budget if budget is not None else None
    paths: list[tuple[int, ...]] = []
    complete = True

    trail = [start]
    visited = {start}

    def dfs(v: int) -> bool:
        nonlocal complete
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            return False
        if len(trail) == n:
            paths.append(tuple(trail))
            return True
        for w in G.out_adj[v]:
            if w in visited:
                continue
            visited.add(w)
            trail.append(w)
            alive = dfs(w)
            trail.pop()
            visited.remove(w)
            if not alive:
                return False
        return True

    dfs(start)
    counts: dict[str, int] = {}
    for p in paths:
        t = encode_step_type(G, p)
        counts[t] = counts.get(t, 0) + 1
    return PathEnumeration(start, tuple(paths), dict(sorted(counts.items())),
                           complete, time.monotonic() - t0)


def traceability_report(specs: Sequence[FamilySpec],
                        budget: Optional[float] = None) -> dict:
    """Exploratory survey: per family, does some directed Hamilton path or
    cycle exist within the budget?  Statuses are data points, not theorems.
    """
    entries = []
    for spec in specs:
        G = build_family(spec)
        path = hamilton_search(G, "path", budget=budget)
        cycle = hamilton_search(G, "cycle", budget=budget)
        to_status = {"found": "found", "none": "none", "budget_exhausted": "unknown"}
        entries.append({
            "family": spec.family,
            "n": spec.n,
            "traceable": to_status[path.status],
            "hamiltonian": to_status[cycle.status],
        })
    return {"kind": "traceability", "exploratory": True, "entries": entries}
