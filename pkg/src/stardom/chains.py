"""Chain-level verifications for the nested star digraphs: density of the
guard-star sets, cuneiform certificates for the embedded copies, segmental
partitions of one guard star by images of the previous one, inclusive images
inside every embedded copy, and per-level copy counts.  chain_report
aggregates everything into one JSON-ready structure.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Optional

from .digraph import (
    OrientedGraph,
    set_from_words,
    strongly_connected,
    vertex_set_digest,
)
from .domination import is_cuneiform, is_wced, sphere_packing_check
from .families import embedded_copy, guard_star, star_digraph
from .perms import Word, insert_embed, word_to_text

# Notes carried verbatim into every chain report.
ERRATA_NOTES = (
    "leading-pair swap: the insertion embedding swaps its first two symbols "
    "exactly when i+j is odd; inserting symbol i at position j shifts the "
    "inversion count by i+j modulo 2, so this is the only parity-preserving "
    "choice (an even-degree-only variant of the condition breaks the "
    "degree-3 embeddings).",
    "cuneiform scope: in an oriented simple graph a perfect plus/minus "
    "dominating set has identical plus and minus boundaries, so the literal "
    "cuneiform condition cannot hold for the guard stars themselves; it is "
    "checked on the embedded copies, whose boundary is the guard star.",
    "minimum sizes: with isolated members admitted (as the stability "
    "definition does), the degree-4 star digraph has three 4-member "
    "solutions (cosets of the Klein four-group) below the 6-member guard "
    "stars; restricted to sets without isolated members the guard stars are "
    "the only solutions and the sphere-packing count applies.",
)

FULL_WITNESS_MAX_DEGREE = 4  # higher levels report digests unless full=True


def _words(G: OrientedGraph, ids) -> list[str]:
    return [G.label_text(v) for v in ids]


def verify_dense(n_max: int) -> list[dict]:
    """Per level n = 1..n_max: the guard-star set of the degree-(n+1) star
    digraph has size n! and density exactly 2/(n+1); the sphere-packing
    count is reported alongside."""
    if n_max > 6:
        raise ValueError("levels beyond degree 7 are out of range")
    levels = []
    for n in range(1, n_max + 1):
        host = star_digraph(n + 1)
        gs = guard_star(n + 1, 0)
        ratio = Fraction(len(gs.vertices), host.vertex_count)
        packing = sphere_packing_check(host, gs.vertices)
        levels.append({
            "level": n,
            "degree": n + 1,
            "vertices": host.vertex_count,
            "set_size": len(gs.vertices),
            "size_ok": len(gs.vertices) == factorial(n),
            "ratio": f"{ratio.numerator}/{ratio.denominator}",
            "ratio_ok": ratio == Fraction(2, n + 1),
            "packing": packing.status,
        })
    return levels


def verify_neighborly(n: int, all_pairs: bool = False) -> dict:
    """Cuneiform certificate for the embedded degree-n copy (i = j = n)
    inside the degree-(n+1) star digraph; all_pairs extends the check to
    every (i, j) copy."""
    host = star_digraph(n + 1)
    pairs = [(i, j) for i in range(n + 1) for j in range(2, n + 1)] if all_pairs else [(n, n)]
    entries = {}
    ok = True
    for i, j in pairs:
        copy = embedded_copy(n, i, j)
        res = is_cuneiform(host, copy.image)
        if res.ok:
            entries[f"{i},{j}"] = {
                "ok": True,
                "pairing": {host.label_text(v): [host.label_text(a), host.label_text(b)]
                            for v, (a, b) in res.pairing.items()},
            }
        else:
            ok = False
            entries[f"{i},{j}"] = {"ok": False, "reason": res.reason}
    return {"degree": n, "ok": ok, "copies": entries}


def _cycle_order(gs) -> list[int]:
    """Canonical traversal of a guard star: when its underlying graph is a
    cycle, walk it from the least word toward the lesser neighbor; otherwise
    sorted order.  Vertex ids are host ids."""
    sub = gs.graph
    und_deg = [len(sub.out_adj[v]) + len(sub.in_adj[v]) for v in range(sub.vertex_count)]
    if not und_deg or any(d != 2 for d in und_deg):
        return list(gs.vertices)
    order = [0]
    prev = None
    while len(order) < sub.vertex_count:
        cur = order[-1]
        nbrs = sorted(set(sub.out_adj[cur]) | set(sub.in_adj[cur]))
        nxt = [w for w in nbrs if w != prev]
        prev = cur
        order.append(nxt[0])
    return [gs.vertices[v] for v in order]


def segment_rows(n: int) -> dict[tuple[int, int], dict]:
    """For each (i, j) with 1 <= i <= n: the image of the degree-n guard
    star under the (i, j) embedding, listed in the source traversal order,
    with the map's orientation mark and the in-host direction of each
    consecutive pair."""
    host = star_digraph(n + 1)
    src_gs = guard_star(n, 0)
    src_host = star_digraph(n)
    order_ids = _cycle_order(src_gs)
    source_words = [src_host.labels[v] for v in order_ids]
    rows: dict[tuple[int, int], dict] = {}
    for j in range(2, n + 1):
        for i in range(1, n + 1):
            copy = embedded_copy(n, i, j)
            images = [insert_embed(w, i, j) for w in source_words]
            ids = [host.vertex_id(w) for w in images]
            marks = []
            for a, b in zip(ids, ids[1:] + ids[:1]):
                if host.has_arc(a, b):
                    marks.append(">")
                elif host.has_arc(b, a):
                    marks.append("<")
                else:
                    marks.append(".")
            rows[(i, j)] = {
                "orientation": copy.orientation_class,
                "words": [word_to_text(w) for w in images],
                "arc_marks": "".join(marks),
            }
    return rows


def verify_segmental(n: int) -> dict:
    """For each j: the images of the degree-n guard star under the (i, j)
    embeddings, i = 1..n, must partition the degree-(n+1) guard star."""
    host = star_digraph(n + 1)
    target = set(guard_star(n + 1, 0).vertices)
    rows = segment_rows(n)
    by_j = {}
    ok = True
    failing = []
    for j in range(2, n + 1):
        seen: set[int] = set()
        disjoint = True
        for i in range(1, n + 1):
            ids = set(host.vertex_id(w) for w in
                      (tuple(int(c) for c in t) for t in rows[(i, j)]["words"]))
            if seen & ids:
                disjoint = False
                failing.append((i, j))
            seen |= ids
        covers = seen == target
        if not (disjoint and covers):
            ok = False
            if not covers:
                failing.append((0, j))
        by_j[str(j)] = {"disjoint": disjoint, "covers": covers}
    return {
        "degree": n,
        "ok": ok,
        "partitions": by_j,
        "rows": {f"{i},{j}": row for (i, j), row in sorted(rows.items())},
        "failing": sorted(set(failing)),
    }


def verify_inclusive(n: int) -> dict:
    """For every (i, j): the image of the degree-n guard star must be a
    worst-case efficient dominating set of the subdigraph induced on the
    (i, j) embedded copy."""
    host = star_digraph(n + 1)
    src_gs = guard_star(n, 0)
    src_host = star_digraph(n)
    guard_words = [src_host.labels[v] for v in src_gs.vertices]
    results = {}
    ok = True
    for i in range(n + 1):
        for j in range(2, n + 1):
            copy = embedded_copy(n, i, j)
            sub = host.induced(copy.image)
            S = set_from_words(sub, (insert_embed(w, i, j) for w in guard_words))
            check = is_wced(sub, S)
            results[f"{i},{j}"] = check.ok
            ok = ok and check.ok
    return {"degree": n, "ok": ok, "pairs": results}


def copy_counts(n: int) -> dict:
    """Census of the embedded copies at degree n: there are (n+1)(n-1) of
    them, half rounded up orientation-preserving; and for every symbol i the
    complement of its guard star splits into the n-1 images with that i."""
    host = star_digraph(n + 1)
    images = {}
    plus = minus = 0
    for i in range(n + 1):
        for j in range(2, n + 1):
            copy = embedded_copy(n, i, j)
            images[(i, j)] = copy.image
            if copy.orientation_class == "plus":
                plus += 1
            else:
                minus += 1
    distinct = len(set(images.values()))
    expected = n * n - 1
    complements_ok = {}
    for i in range(n + 1):
        gs = guard_star(n + 1, i)
        outside = set(range(host.vertex_count)) - set(gs.vertices)
        union: set[int] = set()
        disjoint = True
        for j in range(2, n + 1):
            img = set(images[(i, j)])
            if union & img:
                disjoint = False
            union |= img
        complements_ok[str(i)] = disjoint and union == outside
    return {
        "degree": n,
        "distinct_images": distinct,
        "expected_images": expected,
        "count_ok": distinct == expected,
        "plus_maps": plus,
        "minus_maps": minus,
        "orientation_ok": plus == (expected + 1) // 2 and minus == expected // 2,
        "complement_ok": complements_ok,
        "ok": (distinct == expected
               and plus == (expected + 1) // 2 and minus == expected // 2
               and all(complements_ok.values())),
    }


def chain_report(n_max: int, full: bool = False) -> dict:
    """Aggregate report over levels 1..n_max (host star digraphs of degree
    2..n_max+1): strong connectivity, density, neighborly certificates,
    segmental partitions, inclusive checks, and copy counts.  Witness sets
    are spelled out through degree 4 and digested above that unless full."""
    if n_max > 6:
        raise ValueError("levels beyond degree 7 are out of range")
    levels = []
    dense = verify_dense(n_max)
    all_ok = True
    for n in range(1, n_max + 1):
        host = star_digraph(n + 1)
        entry: dict = dict(dense[n - 1])
        entry["strong"] = strongly_connected(host)
        gs = guard_star(n + 1, 0)
        if full or n + 1 <= FULL_WITNESS_MAX_DEGREE:
            entry["set_words"] = _words(host, gs.vertices)
        else:
            entry["set_digest"] = vertex_set_digest(host, gs.vertices)
        if n >= 2:
            neigh = verify_neighborly(n)
            if not (full or n + 1 <= FULL_WITNESS_MAX_DEGREE):
                for rec in neigh["copies"].values():
                    if "pairing" in rec:
                        rec["pairing_size"] = len(rec.pop("pairing"))
            seg = verify_segmental(n)
            if not (full or n + 1 <= FULL_WITNESS_MAX_DEGREE):
                seg["rows"] = {key: {"orientation": row["orientation"],
                                     "size": len(row["words"])}
                               for key, row in seg["rows"].items()}
            inc = verify_inclusive(n)
            counts = copy_counts(n)
            entry["neighborly"] = neigh
            entry["segmental"] = seg
            entry["inclusive"] = inc
            entry["copy_counts"] = counts
            level_ok = all((entry["size_ok"], entry["ratio_ok"], entry["strong"],
                            neigh["ok"], seg["ok"], inc["ok"], counts["ok"]))
        else:
            level_ok = entry["size_ok"] and entry["ratio_ok"] and entry["strong"]
        entry["ok"] = level_ok
        all_ok = all_ok and level_ok
        levels.append(entry)
    return {
        "schema": "stardom/1",
        "kind": "chain_report",
        "n_max": n_max,
        "levels": levels,
        "errata": list(ERRATA_NOTES),
        "ok": all_ok,
    }
