import json
from fractions import Fraction
from math import factorial

import pytest

from stardom.chains import (
    ERRATA_NOTES,
    chain_report,
    copy_counts,
    segment_rows,
    verify_dense,
    verify_inclusive,
    verify_neighborly,
    verify_segmental,
)
from stardom.families import guard_star, star_digraph
from goldens import PAIRING_DEGREE3, PAIRING_DEGREE4, SEGMENT_ROWS_DEGREE4


def test_verify_dense_levels():
    levels = verify_dense(5)
    assert [lv["ratio"] for lv in levels] == ["1/1", "2/3", "1/2", "2/5", "1/3"]
    for lv in levels:
        n = lv["level"]
        assert lv["set_size"] == factorial(n)
        assert lv["size_ok"] and lv["ratio_ok"]
        assert Fraction(2, n + 1) == Fraction(lv["set_size"], lv["vertices"])
    # level 1 set is a single isolated vertex, outside the packing regime
    assert levels[0]["packing"] == "inapplicable"
    assert all(lv["packing"] == "holds" for lv in levels[1:])


def test_verify_neighborly_small():
    res3 = verify_neighborly(3)
    assert res3["ok"]
    assert res3["copies"]["3,3"]["pairing"] == {
        v: list(pair) for v, pair in PAIRING_DEGREE3.items()}
    res4 = verify_neighborly(4)
    assert res4["copies"]["4,4"]["pairing"] == {
        v: list(pair) for v, pair in PAIRING_DEGREE4.items()}
    res5 = verify_neighborly(5)
    assert res5["ok"]
    assert len(res5["copies"]["5,5"]["pairing"]) == 60


def test_verify_neighborly_all_pairs():
    res = verify_neighborly(4, all_pairs=True)
    assert res["ok"]
    assert len(res["copies"]) == 15


def test_segment_rows_reproduce_reference_table():
    rows = segment_rows(4)
    assert len(rows) == 12
    for key, (orientation, words) in SEGMENT_ROWS_DEGREE4.items():
        row = rows[key]
        assert row["orientation"] == orientation
        assert row["words"] == words
        expected_marks = "><><><" if orientation == "plus" else "<><><>"
        assert row["arc_marks"] == expected_marks


def test_verify_segmental():
    for n in (2, 3, 4, 5):
        res = verify_segmental(n)
        assert res["ok"], res["failing"]
        for j in range(2, n + 1):
            assert res["partitions"][str(j)] == {"disjoint": True, "covers": True}


def test_verify_inclusive():
    for n in (2, 3, 4, 5):
        res = verify_inclusive(n)
        assert res["ok"]
        assert len(res["pairs"]) == (n + 1) * (n - 1)
        assert all(res["pairs"].values())


def test_copy_counts():
    for n, (plus, minus) in ((2, (2, 1)), (3, (4, 4)), (4, (8, 7)), (5, (12, 12))):
        res = copy_counts(n)
        assert res["ok"]
        assert res["distinct_images"] == n * n - 1
        assert res["plus_maps"] == plus and res["minus_maps"] == minus
        assert all(res["complement_ok"].values())


def test_complement_of_guard_star_is_copy_union(st4):
    # spot check the smallest case directly: removing a guard star from the
    # degree-4 star digraph leaves two directed triangles
    from stardom.digraph import directed_triangles, weak_components
    for i in range(4):
        rest = sorted(set(range(12)) - set(guard_star(4, i).vertices))
        sub = st4.induced(rest)
        comps = weak_components(sub)
        assert len(comps) == 2
        assert len(directed_triangles(sub)) == 2


def test_chain_report_structure_and_determinism():
    rep = chain_report(4)
    assert rep["ok"] and rep["n_max"] == 4
    assert [lv["degree"] for lv in rep["levels"]] == [2, 3, 4, 5]
    assert all(lv["strong"] for lv in rep["levels"])
    assert rep["errata"] == list(ERRATA_NOTES)
    again = chain_report(4)
    assert json.dumps(rep, sort_keys=True) == json.dumps(again, sort_keys=True)
    # degree-5 level hides full witnesses unless asked
    assert "set_digest" in rep["levels"][3]
    full = chain_report(4, full=True)
    assert "set_words" in full["levels"][3]
    with pytest.raises(ValueError):
        chain_report(7)


def test_chain_report_level5():
    rep = chain_report(5)
    assert rep["ok"]
    top = rep["levels"][4]
    assert top["degree"] == 6 and top["vertices"] == 360
    assert top["strong"] and top["ratio"] == "1/3"
    assert top["segmental"]["ok"] and top["inclusive"]["ok"]
    assert top["copy_counts"]["distinct_images"] == 24
