import itertools

import pytest

from stardom.digraph import boundary_sets
from stardom.domination import (
    check_pm_dominating,
    enumerate_wced,
    is_cuneiform,
    is_e_set_undirected,
    is_wced,
    min_wced_search,
    sphere_packing_check,
)
from stardom.families import (
    embedded_copy,
    guard_star,
    star_digraph,
    star_graph,
    ternary_cube_oriented,
)
from stardom.perms import word_from_text
from goldens import PAIRING_DEGREE3, PAIRING_DEGREE4
from oracles import brute_wceds


def ids_of(G, texts):
    return [G.vertex_id(word_from_text(t)) for t in texts]


def test_dominating_triangle(triangle):
    # oracle: all 8 subsets of the triangle
    perfect = [S for k in range(4) for S in itertools.combinations(range(3), k)
               if (r := check_pm_dominating(triangle, S)).ok and r.perfect]
    assert perfect == [(0, 1), (0, 2), (1, 2), (0, 1, 2)]
    cert = check_pm_dominating(triangle, [0, 2])
    assert cert.ok and cert.perfect
    assert cert.plus_dominator == {1: 0}
    assert cert.minus_dominator == {1: 2}
    assert cert.revalidate(triangle, [0, 2])
    fail = check_pm_dominating(triangle, [0])
    assert not fail.ok
    assert fail.missing_plus == (2,) and fail.missing_minus == (1,)


def test_certificate_revalidation_rejects_wrong_set(triangle):
    cert = check_pm_dominating(triangle, [0, 2])
    assert not cert.revalidate(triangle, [0, 1])


def test_wced_guard_stars(st4, st5):
    for i in range(4):
        assert is_wced(st4, guard_star(4, i).vertices).ok
    for i in range(5):
        res = is_wced(st5, guard_star(5, i).vertices)
        assert res.ok and res.domination.perfect
        assert len(guard_star(5, i).vertices) == 24
    assert is_wced(star_digraph(2), [0]).ok
    assert not is_wced(st4, range(5)).ok


def test_wced_catalog_degree4(st4):
    # full 2^12 oracle: the guard stars plus the three 4-member coset sets
    catalog = brute_wceds(st4)
    assert len(catalog) == 7
    sizes = sorted(len(s) for s in catalog)
    assert sizes == [4, 4, 4, 6, 6, 6, 6]
    guards = {guard_star(4, i).vertices for i in range(4)}
    assert guards <= set(catalog)
    for S in catalog:
        cert = check_pm_dominating(st4, S)
        if len(S) == 4:
            assert len(cert.isolated) == 4  # every member isolated
        else:
            assert not cert.isolated


def test_enumerate_matches_brute_force(st4, st3):
    enum = enumerate_wced(st4)
    assert enum.complete
    assert enum.solutions == brute_wceds(st4)
    assert enumerate_wced(st3).solutions == ((0, 1), (0, 2), (1, 2))
    t1 = ternary_cube_oriented(1, "cyclic")
    assert enumerate_wced(t1).solutions == ((0, 1), (0, 2), (1, 2))
    assert enumerate_wced(t1).solutions == brute_wceds(t1)


def test_enumerate_without_isolated_members(st4):
    enum = enumerate_wced(st4, allow_isolated=False)
    assert enum.complete
    assert enum.solutions == tuple(sorted(guard_star(4, i).vertices for i in range(4)))


def test_enumerate_budget_flag(st5):
    # any solution needs 60 decisions, so the zero budget trips first
    res = enumerate_wced(st5, budget=0.0)
    assert not res.complete and not res.solutions


def test_min_wced_search(st3, st4):
    assert min_wced_search(star_digraph(2)).size == 1
    assert min_wced_search(st3).size == 2
    found = min_wced_search(st4)
    assert found.size == 4  # the coset sets undercut the guard stars
    assert is_wced(st4, found.witness).ok
    assert min_wced_search(st4, allow_isolated=False).size == 6
    assert min_wced_search(st4, cap=3).status == "none_within_cap"


def test_min_wced_search_backtracker_path(st5):
    # the 60-vertex graph takes the constraint backtracker; cap below any
    # solution exercises the none path quickly
    with pytest.raises(ValueError):
        min_wced_search(st5)
    assert min_wced_search(st5, cap=2).status == "none_within_cap"


def test_cuneiform_certificates(st3, st4, st5):
    cert = is_cuneiform(st4, embedded_copy(3, 3, 3).image)
    assert cert.ok
    t = lambda v: st4.label_text(v)
    got = {t(v): (t(a), t(b)) for v, (a, b) in cert.pairing.items()}
    assert got == PAIRING_DEGREE3
    assert cert.revalidate(st4, embedded_copy(3, 3, 3).image)

    cert5 = is_cuneiform(st5, embedded_copy(4, 4, 4).image)
    assert cert5.ok
    t5 = lambda v: st5.label_text(v)
    got5 = {t5(v): (t5(a), t5(b)) for v, (a, b) in cert5.pairing.items()}
    assert got5 == PAIRING_DEGREE4

    single = is_cuneiform(st3, [0])
    assert single.ok and len(single.pairing) == 1


def test_cuneiform_fails_for_dominating_sets(st4):
    res = is_cuneiform(st4, guard_star(4, 0).vertices)
    assert not res.ok
    assert "intersect" in res.reason


def test_all_copies_cuneiform_with_guard_boundary(st5):
    # every embedded copy's neighbors induce the guard star of its symbol
    for i in range(5):
        expected = set(guard_star(5, i).vertices)
        for j in (2, 3, 4):
            image = embedded_copy(4, i, j).image
            cert = is_cuneiform(st5, image)
            assert cert.ok
            plus, minus = boundary_sets(st5, image)
            assert set(plus) | set(minus) == expected


def test_forced_triangles_leave_copies_once(st4, st5):
    # exactly one directed triangle through each copy vertex exits the copy
    for host, n in ((st4, 3), (st5, 4)):
        from stardom.digraph import directed_triangles
        tris = directed_triangles(host)
        for i in range(n + 1):
            for j in range(2, n + 1):
                image = set(embedded_copy(n, i, j).image)
                for v in image:
                    exits = [t for t in tris if v in t and not set(t) <= image]
                    assert len(exits) == 1


def test_sphere_packing(st3, st5):
    rep = sphere_packing_check(st5, guard_star(5, 0).vertices)
    assert rep.status == "holds" and rep.r == 3
    assert rep.sources == 12 and rep.sinks == 12 and rep.isolated == 0
    rep3 = sphere_packing_check(st3, [0, 2])
    assert rep3.status == "holds" and rep3.r == 1
    lin = ternary_cube_oriented(2, "linear")
    assert sphere_packing_check(lin, [0]).status == "inapplicable"
    # a lone vertex is an isolated member, so the count does not apply
    assert sphere_packing_check(st3, [0]).status == "inapplicable"
    # wrong-size source-plus-sink set in a regular graph fails the count
    st4 = star_digraph(4)
    u = 0
    v = st4.out_adj[0][0]
    assert sphere_packing_check(st4, (u, v)).status == "fails"
    # isolated members make the count inapplicable
    iso = sphere_packing_check(st4, (0, 4, 8, 11))
    assert iso.status == "inapplicable"


def test_packing_holds_for_all_enumerated_no_isolated_solutions(st4):
    for S in enumerate_wced(st4).solutions:
        cert = check_pm_dominating(st4, S)
        if not cert.isolated:
            assert sphere_packing_check(st4, S).status == "holds"


def test_perfect_sets_have_full_boundaries(st4):
    # every outside vertex of a perfect set lies in both boundaries
    for S in enumerate_wced(st4).solutions:
        plus, minus = boundary_sets(st4, S)
        outside = set(range(st4.vertex_count)) - set(S)
        assert set(plus) == outside and set(minus) == outside


def test_e_set_undirected(st5):
    six = star_graph(3)
    # antipodal pair on the 6-cycle
    hit = [S for S in itertools.combinations(range(6), 2)
           if is_e_set_undirected(six, S)]
    assert len(hit) == 3
    assert not is_e_set_undirected(six, [])
    assert not is_e_set_undirected(st5.underlying(), guard_star(5, 0).vertices)
    with pytest.raises(ValueError):
        is_e_set_undirected(st5, [0])
