"""Domination predicates with re-checkable certificates, plus the exhaustive
and budgeted searches built on them.

A worst-case efficient dominating set (WCED) is a vertex set that is both
perfect plus/minus dominating (every outside vertex has exactly one
in-neighbor and exactly one out-neighbor in the set) and plus/minus stable
(members are sources, sinks, or isolated in the induced subdigraph).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .digraph import OrientedGraph, as_vertex_set, boundary_sets, is_pm_stable, is_stable

_REPORT_LIMIT = 10  # failure reports name at most this many vertices per category


def _roles(G: OrientedGraph, s: set[int]) -> tuple[tuple, tuple, tuple, tuple]:
    sources, sinks, isolated, mixed = [], [], [], []
    for v in sorted(s):
        has_in = any(u in s for u in G.in_adj[v])
        has_out = any(u in s for u in G.out_adj[v])
        if has_in and has_out:
            mixed.append(v)
        elif has_out:
            sources.append(v)
        elif has_in:
            sinks.append(v)
        else:
            isolated.append(v)
    return tuple(sources), tuple(sinks), tuple(isolated), tuple(mixed)


@dataclass(frozen=True)
class DominationCertificate:
    """Witness that S is plus/minus dominating: one (+)dominator (arc into v)
    and one (-)dominator (arc out of v) per outside vertex, plus the role
    partition of S in its induced subdigraph.  `mixed` is empty exactly when
    S is also plus/minus stable."""
    ok = True
    perfect: bool
    plus_dominator: dict[int, int]
    minus_dominator: dict[int, int]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    isolated: tuple[int, ...]
    mixed: tuple[int, ...]
    multiple_plus: tuple[int, ...] = ()
    multiple_minus: tuple[int, ...] = ()

    def revalidate(self, G: OrientedGraph, S: Iterable[int]) -> bool:
        """Re-check every claim from scratch against G."""
        s = set(as_vertex_set(G, S))
        outside = [v for v in range(G.vertex_count) if v not in s]
        if set(self.plus_dominator) != set(outside) or set(self.minus_dominator) != set(outside):
            return False
        for v in outside:
            plus = [u for u in G.in_adj[v] if u in s]
            minus = [u for u in G.out_adj[v] if u in s]
            if self.plus_dominator[v] not in plus or self.minus_dominator[v] not in minus:
                return False
            if self.perfect and (len(plus) != 1 or len(minus) != 1):
                return False
        return _roles(G, s) == (self.sources, self.sinks, self.isolated, self.mixed)


@dataclass(frozen=True)
class DominationFailure:
    """Vertices breaking plus/minus domination, at most 10 per category."""
    ok = False
    missing_plus: tuple[int, ...]
    missing_minus: tuple[int, ...]


def check_pm_dominating(G: OrientedGraph, S: Iterable[int]):
    """Certificate that every outside vertex is (+)- and (-)dominated by S,
    or a failure report naming the first offenders.  The certificate's
    perfect flag is set when both dominators are unique everywhere."""
    s = set(as_vertex_set(G, S))
    plus_dom: dict[int, int] = {}
    minus_dom: dict[int, int] = {}
    missing_plus, missing_minus, multi_plus, multi_minus = [], [], [], []
    perfect = True
    for v in range(G.vertex_count):
        if v in s:
            continue
        plus = [u for u in G.in_adj[v] if u in s]
        minus = [u for u in G.out_adj[v] if u in s]
        if not plus:
            missing_plus.append(v)
        else:
            plus_dom[v] = plus[0]
            if len(plus) > 1:
                perfect = False
                multi_plus.append(v)
        if not minus:
            missing_minus.append(v)
        else:
            minus_dom[v] = minus[0]
            if len(minus) > 1:
                perfect = False
                multi_minus.append(v)
    if missing_plus or missing_minus:
        return DominationFailure(tuple(missing_plus[:_REPORT_LIMIT]),
                                 tuple(missing_minus[:_REPORT_LIMIT]))
    sources, sinks, isolated, mixed = _roles(G, s)
    return DominationCertificate(perfect, plus_dom, minus_dom,
                                 sources, sinks, isolated, mixed,
                                 tuple(multi_plus[:_REPORT_LIMIT]),
                                 tuple(multi_minus[:_REPORT_LIMIT]))


@dataclass(frozen=True)
class WcedCheck:
    """Outcome of the worst-case efficient dominating set predicate."""
    ok: bool
    pm_stable: bool
    domination: object  # DominationCertificate or DominationFailure
    reason: str = ""


def is_wced(G: OrientedGraph, S: Iterable[int]) -> WcedCheck:
    """S is a WCED iff it is plus/minus stable and perfect plus/minus
    dominating; returns both certificates on success."""
    stable = is_pm_stable(G, S)
    dom = check_pm_dominating(G, S)
    if not stable:
        return WcedCheck(False, False, dom, "not plus/minus stable")
    if not dom.ok:
        return WcedCheck(False, True, dom, "some outside vertex is undominated")
    if not dom.perfect:
        return WcedCheck(False, True, dom, "domination is not perfect")
    return WcedCheck(True, True, dom)


@dataclass(frozen=True)
class CuneiformCertificate:
    """Witness of the cuneiform condition: disjoint stable boundaries and a
    pairing of each member v with a vertex-disjoint boundary arc
    (tail, head) such that v -> tail -> head -> v is a directed triangle."""
    ok = True
    pairing: dict[int, tuple[int, int]]
    plus_boundary: tuple[int, ...]
    minus_boundary: tuple[int, ...]

    def triangles(self) -> list[tuple[int, int, int]]:
        return [(v, t, h) for v, (t, h) in sorted(self.pairing.items())]

    def revalidate(self, G: OrientedGraph, S: Iterable[int]) -> bool:
        s = as_vertex_set(G, S)
        plus, minus = boundary_sets(G, s)
        if plus != self.plus_boundary or minus != self.minus_boundary:
            return False
        if set(plus) & set(minus):
            return False
        if not (is_stable(G, plus) and is_stable(G, minus)):
            return False
        if sorted(self.pairing) != list(s):
            return False
        used: set[int] = set()
        plus_set, minus_set = set(plus), set(minus)
        for v, (t, h) in self.pairing.items():
            if t not in plus_set or h not in minus_set:
                return False
            if t in used or h in used:
                return False
            used.update((t, h))
            if not (G.has_arc(v, t) and G.has_arc(t, h) and G.has_arc(h, v)):
                return False
        return True


@dataclass(frozen=True)
class CuneiformFailure:
    ok = False
    reason: str
    detail: tuple[int, ...] = ()


def is_cuneiform(G: OrientedGraph, S: Iterable[int]):
    """Cuneiform certificate for S, or the first failed condition.

    The boundary arcs are matched to members by backtracking over the
    per-member candidate triangles in sorted order, so the returned pairing
    is deterministic.  Note that a perfect dominating set in an oriented
    simple graph has equal plus and minus boundaries, so the predicate can
    only hold for sets (such as embedded copies) that leave part of the
    graph undominated.
    """
    s = as_vertex_set(G, S)
    plus, minus = boundary_sets(G, s)
    overlap = sorted(set(plus) & set(minus))
    if overlap:
        return CuneiformFailure("plus and minus boundaries intersect",
                                tuple(overlap[:_REPORT_LIMIT]))
    if not is_stable(G, plus):
        return CuneiformFailure("plus boundary is not stable")
    if not is_stable(G, minus):
        return CuneiformFailure("minus boundary is not stable")
    plus_set, minus_set = set(plus), set(minus)
    candidates: list[list[tuple[int, int]]] = []
    for v in s:
        cand = []
        for t in G.out_adj[v]:
            if t not in plus_set:
                continue
            for h in G.out_adj[t]:
                if h in minus_set and G.has_arc(h, v):
                    cand.append((t, h))
        if not cand:
            return CuneiformFailure("member closes no boundary triangle", (v,))
        candidates.append(sorted(cand))

    pairing: dict[int, tuple[int, int]] = {}
    used: set[int] = set()

    def assign(k: int) -> bool:
        if k == len(s):
            return True
        for t, h in candidates[k]:
            if t in used or h in used:
                continue
            used.update((t, h))
            pairing[s[k]] = (t, h)
            if assign(k + 1):
                return True
            used.difference_update((t, h))
            del pairing[s[k]]
        return False

    if not assign(0):
        return CuneiformFailure("no vertex-disjoint boundary pairing exists")
    return CuneiformCertificate(dict(sorted(pairing.items())), plus, minus)


@dataclass(frozen=True)
class SpherePackingReport:
    """Outcome of the oriented sphere-packing count |V| = (2+r)|S|/2.

    Inapplicable when the graph is not in=out regular or when the set has
    isolated members (the count assumes |S|/2 sources and |S|/2 sinks)."""
    status: str  # holds | fails | inapplicable
    r: Optional[int]
    set_size: int
    sources: int
    sinks: int
    isolated: int
    reason: str = ""


def sphere_packing_check(G: OrientedGraph, S: Iterable[int]) -> SpherePackingReport:
    s = set(as_vertex_set(G, S))
    sources, sinks, isolated, mixed = _roles(G, s)
    degrees = {(len(G.out_adj[v]), len(G.in_adj[v])) for v in range(G.vertex_count)}
    regular = len(degrees) == 1 and len(set(next(iter(degrees)))) == 1 if degrees else True
    r = next(iter(degrees))[0] if regular and degrees else None
    if not regular:
        return SpherePackingReport("inapplicable", None, len(s), len(sources),
                                   len(sinks), len(isolated),
                                   "graph is not in=out regular")
    if isolated:
        return SpherePackingReport("inapplicable", r, len(s), len(sources),
                                   len(sinks), len(isolated),
                                   "set has isolated members")
    lhs = 2 * G.vertex_count
    rhs = (2 + r) * len(s)
    status = "holds" if lhs == rhs else "fails"
    return SpherePackingReport(status, r, len(s), len(sources), len(sinks), len(isolated))


@dataclass(frozen=True)
class GammaSearch:
    """Result of the minimum-WCED search."""
    status: str  # found | none_within_cap
    size: Optional[int]
    witness: tuple[int, ...]
    cap: int
    exhaustive: bool


def _accepts(G: OrientedGraph, S: tuple[int, ...], allow_isolated: bool) -> bool:
    check = is_wced(G, S)
    if not check.ok:
        return False
    return allow_isolated or not check.domination.isolated


def min_wced_search(G: OrientedGraph, cap: Optional[int] = None,
                    allow_isolated: bool = True) -> GammaSearch:
    """Smallest WCED of size <= cap; the witness is the lexicographically
    least one of minimum size.

    Graphs on at most 24 vertices are searched by subset enumeration in
    increasing size; larger graphs require a cap and use the constraint
    backtracker.  allow_isolated=False restricts to sets whose members are
    all sources or sinks, the regime where the sphere-packing count applies.
    """
    n = G.vertex_count
    if n <= 24:
        top = cap if cap is not None else n
        for k in range(1, top + 1):
            for combo in itertools.combinations(range(n), k):
                if _accepts(G, combo, allow_isolated):
                    return GammaSearch("found", k, combo, top, True)
        return GammaSearch("none_within_cap", None, (), top, True)
    if cap is None:
        raise ValueError(f"graphs on {n} > 24 vertices require an explicit cap")
    for k in range(1, cap + 1):
        hit = _wced_backtrack(G, max_size=k, exact_size=k, first_only=True,
                              allow_isolated=allow_isolated)
        if hit.solutions:
            return GammaSearch("found", k, hit.solutions[0], cap, hit.complete)
    return GammaSearch("none_within_cap", None, (), cap, True)


@dataclass(frozen=True)
class WcedEnumeration:
    """All WCEDs found (sorted), with a completeness flag for budgeted runs."""
    solutions: tuple[tuple[int, ...], ...]
    complete: bool
    elapsed: float


def enumerate_wced(G: OrientedGraph, budget: Optional[float] = None,
                   max_size: Optional[int] = None,
                   allow_isolated: bool = True) -> WcedEnumeration:
    """Enumerate every WCED by exact-cover-style backtracking: outside
    vertices must end with exactly one dominator of each sign, members must
    stay sources/sinks/isolated (or sources/sinks only when
    allow_isolated=False)."""
    return _wced_backtrack(G, budget=budget, max_size=max_size,
                           allow_isolated=allow_isolated)


def _wced_backtrack(G: OrientedGraph, budget: Optional[float] = None,
                    max_size: Optional[int] = None,
                    exact_size: Optional[int] = None,
                    first_only: bool = False,
                    allow_isolated: bool = True) -> WcedEnumeration:
    n = G.vertex_count
    start = time.monotonic()
    deadline = start + budget if budget is not None else None
    UNDEC, IN, OUT = 0, 1, 2
    status = [UNDEC] * n
    # member_in[v]/member_out[v]: members of S among v's in-/out-neighbors;
    # for an outside v these are its dominator counts of each sign
    member_in = [0] * n
    member_out = [0] * n
    undecided_in = [len(G.in_adj[v]) for v in range(n)]
    undecided_out = [len(G.out_adj[v]) for v in range(n)]
    solutions: list[tuple[int, ...]] = []
    members: list[int] = []
    complete = True
    counter = 0

    def feasible_after_decision(v: int) -> bool:
        if status[v] == IN:
            # members with in- and out-members at once are mid vertices;
            # one-sided multiplicity is fine for stability
            if member_in[v] > 0 and member_out[v] > 0:
                return False
        else:  # OUT
            if member_in[v] > 1 or member_out[v] > 1:
                return False
            if member_in[v] == 0 and undecided_in[v] == 0:
                return False
            if member_out[v] == 0 and undecided_out[v] == 0:
                return False
        return True

    def propagate(v: int, decision: int) -> tuple[bool, list[tuple[str, int]]]:
        """Apply a decision; returns feasibility plus an undo log."""
        undo: list[tuple[str, int]] = []
        status[v] = decision
        ok = True
        for w in G.out_adj[v]:
            undecided_in[w] -= 1
            undo.append(("ui", w))
            if decision == IN:
                member_in[w] += 1
                undo.append(("mi", w))
        for w in G.in_adj[v]:
            undecided_out[w] -= 1
            undo.append(("uo", w))
            if decision == IN:
                member_out[w] += 1
                undo.append(("mo", w))
        # check v itself and every touched neighbor
        if not feasible_after_decision(v):
            ok = False
        if ok:
            for w in G.out_adj[v] + G.in_adj[v]:
                if status[w] == IN:
                    if member_in[w] > 0 and member_out[w] > 0:
                        ok = False
                        break
                elif status[w] == OUT:
                    if member_in[w] > 1 or member_out[w] > 1:
                        ok = False
                        break
                    if member_in[w] == 0 and undecided_in[w] == 0:
                        ok = False
                        break
                    if member_out[w] == 0 and undecided_out[w] == 0:
                        ok = False
                        break
        return ok, undo

    def rollback(v: int, undo: list[tuple[str, int]]) -> None:
        status[v] = UNDEC
        for tag, w in undo:
            if tag == "ui":
                undecided_in[w] += 1
            elif tag == "uo":
                undecided_out[w] += 1
            elif tag == "mi":
                member_in[w] -= 1
            else:
                member_out[w] -= 1

    def dfs(v: int) -> bool:
        """Returns False when the search should stop (budget or first hit)."""
        nonlocal complete, counter
        counter += 1
        if deadline is not None and counter % 16 == 0 and time.monotonic() > deadline:
            complete = False
            return False
        if v == n:
            S = tuple(members)
            if exact_size is not None and len(S) != exact_size:
                return True
            if _accepts(G, S, allow_isolated):  # from-scratch check keeps this exact
                solutions.append(S)
                if first_only:
                    return False
            return True
        for decision in (IN, OUT):
            if decision == IN:
                if max_size is not None and len(members) >= max_size:
                    continue
                members.append(v)
            ok, undo = propagate(v, decision)
            alive = dfs(v + 1) if ok else True
            rollback(v, undo)
            if decision == IN:
                members.pop()
            if not alive:
                return False
        return True

    dfs(0)
    return WcedEnumeration(tuple(sorted(solutions)), complete,
                           time.monotonic() - start)


def is_e_set_undirected(G: OrientedGraph, S: Iterable[int]) -> bool:
    """Classic efficient-domination test: the closed neighborhoods of the
    members are pairwise disjoint and cover the whole vertex set."""
    if not G.undirected:
        raise ValueError("e-set test needs an undirected graph")
    s = as_vertex_set(G, S)
    covered: set[int] = set()
    for v in s:
        ball = {v, *G.out_adj[v]}
        if covered & ball:
            return False
        covered |= ball
    return len(covered) == G.vertex_count
