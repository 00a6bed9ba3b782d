"""Command-line surface: build/verify/search/chain/maps/hamilton verbs with
JSON report envelopes.

Exit codes: 0 verified or found, 1 refuted or none, 2 usage or internal
error, 3 budget exhausted.  Identical command lines produce identical result
payloads; the timestamp lives only in the envelope.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict
from typing import Optional, Sequence

from . import __version__
from .digraph import (
    OrientedGraph,
    as_vertex_set,
    boundary_sets,
    export_graph,
    is_pm_stable,
    is_stable,
    strongly_connected,
)
from .domination import (
    check_pm_dominating,
    enumerate_wced,
    is_cuneiform,
    is_e_set_undirected,
    is_wced,
    min_wced_search,
    sphere_packing_check,
)
from .families import (
    FAMILY_CODES,
    FamilySpec,
    build_family,
    embedded_copy,
    guard_star,
    star_digraph,
)
from .chains import ERRATA_NOTES, chain_report, copy_counts, segment_rows
from .hamilton import (
    enumerate_hamilton_paths,
    hamilton_search,
    traceability_report,
)
from .perms import word_from_text, word_to_text

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


def parse_set_file(path: str, G: OrientedGraph) -> tuple[int, ...]:
    """Read a vertex set: one permutation word per line, '#' comments.
    Words must all have the host family's degree and name actual vertices."""
    ids = []
    seen = set()
    degree = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                w = word_from_text(line)
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: {exc}")
            if degree is None:
                degree = len(w)
            elif len(w) != degree:
                raise UsageError(f"{path}:{lineno}: word {line} has degree "
                                 f"{len(w)}, expected {degree}")
            if w in seen:
                raise UsageError(f"{path}:{lineno}: duplicate word {line}")
            seen.add(w)
            try:
                ids.append(G.vertex_id(w))
            except KeyError:
                raise UsageError(f"{path}:{lineno}: word {line} is not a vertex "
                                 f"of {G.family_tag}")
    return as_vertex_set(G, ids)


def _family_spec(args) -> FamilySpec:
    if args.family is None or args.n is None:
        raise UsageError("--family and --n are required")
    if args.family not in FAMILY_CODES:
        raise UsageError(f"unknown family {args.family!r} (one of {'|'.join(FAMILY_CODES)})")
    return FamilySpec(args.family, args.n, args.orientation)


def _resolve_set(args, G: OrientedGraph) -> tuple[int, ...]:
    """A vertex set from --set FILE or the --guard I[,J] shorthand."""
    if args.set and args.guard:
        raise UsageError("--set and --guard are mutually exclusive")
    if args.set:
        return parse_set_file(args.set, G)
    if args.guard is not None:
        parts = args.guard.split(",")
        if len(parts) == 1:
            return guard_star(_degree_of(args), int(parts[0])).vertices
        if len(parts) == 2:
            i, j = int(parts[0]), int(parts[1])
            return embedded_copy(_degree_of(args) - 1, i, j).image
        raise UsageError(f"--guard expects I or I,J, got {args.guard!r}")
    raise UsageError("a vertex set is required: --set FILE or --guard I[,J]")


def _degree_of(args) -> int:
    if args.family != "std":
        raise UsageError("--guard shorthand applies to the std family only")
    return args.n


def _words_of(G: OrientedGraph, ids) -> list[str]:
    return [G.label_text(v) for v in ids]


def _cmd_build(args) -> tuple[int, dict, Optional[str]]:
    G = build_family(_family_spec(args))
    fmt = args.format or "json"
    text = export_graph(G, fmt)
    payload = {
        "family_tag": G.family_tag,
        "vertex_count": G.vertex_count,
        "arc_count": G.arc_count,
        "format": fmt,
    }
    return EXIT_OK, {"status": "verified", **payload}, text


def _cmd_verify(args) -> tuple[int, dict, Optional[str]]:
    G = build_family(_family_spec(args))
    what = args.what
    if what == "e-set":
        H = G if G.undirected else G.underlying()
        S = _resolve_set(args, G)
        ok = is_e_set_undirected(H, S)
        return (EXIT_OK if ok else EXIT_REFUTED,
                {"status": "verified" if ok else "refuted",
                 "check": what, "set_size": len(S)}, None)
    S = _resolve_set(args, G)
    if what == "wced":
        res = is_wced(G, S)
        payload = {
            "check": what,
            "set_size": len(S),
            "pm_stable": res.pm_stable,
            "dominating": res.domination.ok,
            "perfect": res.domination.ok and res.domination.perfect,
        }
        if res.ok:
            cert = res.domination
            payload["certificate"] = {
                "sources": _words_of(G, cert.sources),
                "sinks": _words_of(G, cert.sinks),
                "isolated": _words_of(G, cert.isolated),
                "plus_dominator": {G.label_text(v): G.label_text(u)
                                   for v, u in sorted(cert.plus_dominator.items())},
                "minus_dominator": {G.label_text(v): G.label_text(u)
                                    for v, u in sorted(cert.minus_dominator.items())},
            }
        else:
            payload["reason"] = res.reason
        return (EXIT_OK if res.ok else EXIT_REFUTED,
                {"status": "verified" if res.ok else "refuted", **payload}, None)
    if what == "cuneiform":
        res = is_cuneiform(G, S)
        if res.ok:
            payload = {
                "check": what,
                "pairing": {G.label_text(v): [G.label_text(a), G.label_text(b)]
                            for v, (a, b) in res.pairing.items()},
                "plus_boundary": _words_of(G, res.plus_boundary),
                "minus_boundary": _words_of(G, res.minus_boundary),
            }
            return EXIT_OK, {"status": "verified", **payload}, None
        return EXIT_REFUTED, {"status": "refuted", "check": what,
                              "reason": res.reason,
                              "detail": _words_of(G, res.detail)}, None
    if what == "dominating":
        res = check_pm_dominating(G, S)
        if res.ok:
            return EXIT_OK, {"status": "verified", "check": what,
                             "perfect": res.perfect}, None
        return EXIT_REFUTED, {"status": "refuted", "check": what,
                              "missing_plus": _words_of(G, res.missing_plus),
                              "missing_minus": _words_of(G, res.missing_minus)}, None
    if what == "stable":
        ok = is_stable(G, S)
        return (EXIT_OK if ok else EXIT_REFUTED,
                {"status": "verified" if ok else "refuted", "check": what}, None)
    if what == "pm-stable":
        ok = is_pm_stable(G, S)
        return (EXIT_OK if ok else EXIT_REFUTED,
                {"status": "verified" if ok else "refuted", "check": what}, None)
    if what == "sphere":
        rep = sphere_packing_check(G, S)
        # inapplicable is a determination, not a refutation
        code = EXIT_REFUTED if rep.status == "fails" else EXIT_OK
        status = {"holds": "verified", "fails": "refuted",
                  "inapplicable": "unknown"}[rep.status]
        return code, {"status": status, "check": what, **asdict(rep)}, None
    raise UsageError(f"unknown verify target {what!r}")


def _cmd_search(args) -> tuple[int, dict, Optional[str]]:
    G = build_family(_family_spec(args))
    what = args.what
    if what == "gamma":
        res = min_wced_search(G, cap=args.cap)
        if res.status == "found":
            return EXIT_OK, {"status": "found", "minimum": res.size,
                             "witness": _words_of(G, res.witness),
                             "exhaustive": res.exhaustive}, None
        return EXIT_REFUTED, {"status": "none", "cap": res.cap,
                              "note": "unknown above cap"}, None
    if what == "epm":
        res = enumerate_wced(G, budget=args.budget)
        iso_counts = []
        for sol in res.solutions:
            cert = check_pm_dominating(G, sol)
            iso_counts.append(len(cert.isolated))
        payload = {
            "solutions": [_words_of(G, s) for s in res.solutions],
            "isolated_member_counts": iso_counts,
            "complete": res.complete,
        }
        if not res.complete:
            return EXIT_BUDGET, {"status": "unknown", **payload}, None
        code = EXIT_OK if res.solutions else EXIT_REFUTED
        return code, {"status": "found" if res.solutions else "none", **payload}, None
    if what in ("hamilton-cycle", "hamilton-path"):
        mode = "cycle" if what.endswith("cycle") else "path"
        start = G.vertex_id(word_from_text(args.start)) if args.start else None
        rep = hamilton_search(G, mode, start=start, budget=args.budget)
        payload = {
            "mode": mode,
            "nodes_expanded": rep.nodes_expanded,
            "witness": _words_of(G, rep.witness),
        }
        if rep.status == "found":
            return EXIT_OK, {"status": "found", **payload}, None
        if rep.status == "none":
            return EXIT_REFUTED, {"status": "refuted", **payload}, None
        return EXIT_BUDGET, {"status": "unknown", **payload}, None
    raise UsageError(f"unknown search target {what!r}")


def _cmd_chain(args) -> tuple[int, dict, Optional[str]]:
    rep = chain_report(args.nmax, full=args.full)
    code = EXIT_OK if rep["ok"] else EXIT_REFUTED
    return code, {"status": "verified" if rep["ok"] else "refuted",
                  "report": rep}, None


def _cmd_maps(args) -> tuple[int, dict, Optional[str]]:
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    host = star_digraph(n + 1)
    entries = {}
    for i in range(n + 1):
        for j in range(2, n + 1):
            copy = embedded_copy(n, i, j)
            rec = {"orientation": copy.orientation_class, "size": len(copy.image)}
            if args.full:
                rec["image"] = _words_of(host, copy.image)
            entries[f"{i},{j}"] = rec
    payload = {
        "degree": n,
        "maps": entries,
        "copy_counts": copy_counts(n),
        "segment_rows": {f"{i},{j}": row for (i, j), row in sorted(segment_rows(n).items())},
    }
    return EXIT_OK, {"status": "verified", **payload}, None


def _cmd_hamilton(args) -> tuple[int, dict, Optional[str]]:
    if args.mode == "trace":
        specs = [FamilySpec(args.family or "std", n) for n in _parse_range(args.range or str(args.n))]
        rep = traceability_report(specs, budget=args.budget)
        return EXIT_OK, {"status": "verified", **rep}, None
    G = build_family(_family_spec(args))
    if args.mode == "types":
        starts = range(G.vertex_count) if args.start is None else \
            [G.vertex_id(word_from_text(args.start))]
        combined: dict[str, int] = {}
        total = 0
        complete = True
        for s in starts:
            e = enumerate_hamilton_paths(G, s, budget=args.budget)
            complete = complete and e.complete
            total += len(e.paths)
            for t, c in e.type_counts.items():
                combined[t] = combined.get(t, 0) + c
        payload = {"mode": "types", "paths": total,
                   "type_counts": dict(sorted(combined.items())),
                   "complete": complete}
        if not complete:
            return EXIT_BUDGET, {"status": "unknown", **payload}, None
        return EXIT_OK, {"status": "found" if total else "refuted", **payload}, None
    start = G.vertex_id(word_from_text(args.start)) if args.start else None
    rep = hamilton_search(G, args.mode, start=start, budget=args.budget)
    payload = {"mode": args.mode, "witness": _words_of(G, rep.witness),
               "nodes_expanded": rep.nodes_expanded}
    if rep.status == "found":
        return EXIT_OK, {"status": "found", **payload}, None
    if rep.status == "none":
        return EXIT_REFUTED, {"status": "refuted", **payload}, None
    return EXIT_BUDGET, {"status": "unknown", **payload}, None


def _parse_range(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stardom",
                                description="verification and search toolkit for "
                                            "worst-case efficient domination")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, family=True):
        if family:
            sp.add_argument("--family", choices=FAMILY_CODES)
            sp.add_argument("--n", type=int)
            sp.add_argument("--orientation", choices=("linear", "cyclic"),
                            default="cyclic")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--full", action="store_true",
                        help="embed full witness sets in reports")

    sp = sub.add_parser("build", help="construct a family and export it")
    common(sp)
    sp.add_argument("--format", choices=("dot", "edges", "json"), default="json")

    sp = sub.add_parser("verify", help="check a predicate on a vertex set")
    sp.add_argument("what", choices=("wced", "cuneiform", "dominating", "stable",
                                     "pm-stable", "e-set", "sphere"))
    common(sp)
    sp.add_argument("--set", help="vertex-set file, one word per line")
    sp.add_argument("--guard", help="guard shorthand I (guard star) or I,J (embedded copy)")

    sp = sub.add_parser("search", help="search for sets, cycles, or paths")
    sp.add_argument("what", choices=("gamma", "epm", "hamilton-cycle", "hamilton-path"))
    common(sp)
    sp.add_argument("--cap", type=int)
    sp.add_argument("--budget", type=float, help="wall-clock seconds")
    sp.add_argument("--start", help="start word for path search")

    sp = sub.add_parser("chain", help="verify the chain levels and emit the report")
    common(sp, family=False)
    sp.add_argument("--nmax", type=int, required=True)

    sp = sub.add_parser("maps", help="classify the insertion embeddings at one degree")
    common(sp, family=False)
    sp.add_argument("--n", type=int)

    sp = sub.add_parser("hamilton", help="Hamilton search, path typing, traceability")
    common(sp)
    sp.add_argument("--mode", choices=("cycle", "path", "types", "trace"),
                    default="cycle")
    sp.add_argument("--start", help="start word")
    sp.add_argument("--budget", type=float)
    sp.add_argument("--range", help="degree range for trace mode, e.g. 3-5")

    return p


_HANDLERS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "chain": _cmd_chain,
    "maps": _cmd_maps,
    "hamilton": _cmd_hamilton,
}


def run(argv: Sequence[str]) -> int:
    """Execute one command; writes the JSON report and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    envelope = {
        "schema": "stardom/1",
        "version": __version__,
        "command": list(argv),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    try:
        code, result, extra_text = _HANDLERS[args.verb](args)
        envelope["status"] = result.get("status", "verified")
        envelope["result"] = result
        if args.verb == "chain":
            envelope["errata"] = list(ERRATA_NOTES)
    except UsageError as exc:
        envelope["status"] = "error"
        envelope["result"] = {"status": "error", "message": str(exc)}
        code, extra_text = EXIT_USAGE, None
    except (ValueError, KeyError, OSError) as exc:
        envelope["status"] = "error"
        envelope["result"] = {"status": "error",
                              "message": f"{type(exc).__name__}: {exc}"}
        code, extra_text = EXIT_USAGE, None
    text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    if extra_text is not None and args.verb == "build":
        text = extra_text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
