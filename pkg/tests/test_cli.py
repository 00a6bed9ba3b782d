import json

import pytest

from stardom.cli import parse_set_file, run
from stardom.digraph import parse_graph
from stardom.families import star_digraph
from stardom.perms import word_from_text


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_build_edges(capsys):
    code = run(["build", "--family", "std", "--n", "4", "--format", "edges"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "vertices 12"
    assert len(lines) == 1 + 24
    G = parse_graph(out, "edges")
    assert G.arcs() == star_digraph(4).arcs()


def test_build_dot(capsys):
    code = run(["build", "--family", "std", "--n", "3", "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("digraph {")


def test_verify_wced_guard(capsys):
    code, rep = run_json(capsys, "verify", "wced", "--family", "std", "--n", "5",
                         "--guard", "0")
    assert code == 0
    assert rep["status"] == "verified"
    assert rep["result"]["perfect"] is True
    assert len(rep["result"]["certificate"]["sources"]) == 12


def test_verify_cuneiform_copy(capsys):
    code, rep = run_json(capsys, "verify", "cuneiform", "--family", "std",
                         "--n", "4", "--guard", "3,3")
    assert code == 0
    assert rep["result"]["pairing"]["0123"] == ["3021", "1320"]


def test_verify_wced_refuted(capsys, tmp_path):
    f = tmp_path / "set.txt"
    f.write_text("0123\n")
    code, rep = run_json(capsys, "verify", "wced", "--family", "std", "--n", "4",
                         "--set", str(f))
    assert code == 1
    assert rep["status"] == "refuted"


def test_search_gamma(capsys):
    code, rep = run_json(capsys, "search", "gamma", "--family", "std", "--n", "3")
    assert code == 0
    assert rep["result"]["minimum"] == 2


def test_search_hamilton_cycle_refuted(capsys):
    code, rep = run_json(capsys, "search", "hamilton-cycle", "--family", "std",
                         "--n", "4")
    assert code == 1
    assert rep["status"] == "refuted"


def test_search_epm(capsys):
    code, rep = run_json(capsys, "search", "epm", "--family", "tc", "--n", "1")
    assert code == 0
    assert len(rep["result"]["solutions"]) == 3


def test_chain_verb(capsys):
    code, rep = run_json(capsys, "chain", "--nmax", "3")
    assert code == 0
    assert rep["result"]["report"]["ok"]
    assert rep["errata"]


def test_maps_verb(capsys):
    code, rep = run_json(capsys, "maps", "--n", "4")
    assert code == 0
    assert rep["result"]["copy_counts"]["plus_maps"] == 8
    assert rep["result"]["segment_rows"]["1,4"]["words"][0] == "20341"


def test_hamilton_types_verb(capsys):
    code, rep = run_json(capsys, "hamilton", "--family", "std", "--n", "4",
                         "--mode", "types", "--start", "0123")
    assert code == 0
    assert rep["result"]["type_counts"] == {"aababbb": 2, "bbbabaa": 2}


def test_usage_errors(capsys):
    assert run(["verify", "wced", "--family", "std", "--n", "4"]) == 2
    capsys.readouterr()
    assert run(["verify", "wced", "--family", "nope", "--n", "4"]) == 2
    capsys.readouterr()
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["build", "--family", "std", "--n", "99"]) == 2
    capsys.readouterr()


def test_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["search", "gamma", "--family", "std", "--n", "3",
                "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    rep = json.loads(out.read_text())
    assert rep["result"]["minimum"] == 2


def test_payload_determinism(capsys):
    _, rep1 = run_json(capsys, "chain", "--nmax", "3")
    _, rep2 = run_json(capsys, "chain", "--nmax", "3")
    assert rep1["result"] == rep2["result"]


def test_parse_set_file(tmp_path):
    G = star_digraph(4)
    good = tmp_path / "good.txt"
    good.write_text("# copy members\n0123\n1203\n2013  # trailing comment\n\n")
    ids = parse_set_file(str(good), G)
    assert [G.label_text(v) for v in ids] == ["0123", "1203", "2013"]

    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    assert parse_set_file(str(empty), G) == ()

    odd = tmp_path / "odd.txt"
    odd.write_text("0132\n")
    with pytest.raises(ValueError, match="not a vertex"):
        parse_set_file(str(odd), G)

    dup = tmp_path / "dup.txt"
    dup.write_text("0123\n0123\n")
    with pytest.raises(ValueError, match="duplicate"):
        parse_set_file(str(dup), G)

    mixed = tmp_path / "mixed.txt"
    mixed.write_text("0123\n01234\n")
    with pytest.raises(ValueError, match="degree"):
        parse_set_file(str(mixed), G)


def test_set_file_errors_exit_usage(tmp_path, capsys):
    odd = tmp_path / "odd.txt"
    odd.write_text("0132\n")
    code = run(["verify", "wced", "--family", "std", "--n", "4",
                "--set", str(odd)])
    capsys.readouterr()
    assert code == 2
