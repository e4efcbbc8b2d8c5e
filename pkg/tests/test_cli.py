import json
from pathlib import Path

import pytest

from gkgraph.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_accept_exit_zero(capsys):
    code, out, _ = run(capsys, "classify", "--family", "A7", str(DATA / "fig1.edges"))
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["accepted"] and data["condition_tag"] == "A7:2.4"


def test_classify_reject_exit_one(capsys):
    code, out, _ = run(capsys, "classify", "--family", "PSL(3,5)", str(DATA / "fig3.edges"))
    assert code == 1
    data = json.loads(out)
    assert not data["accepted"] and "coloring" in data["refutation"]


def test_classify_all(capsys):
    code, out, _ = run(capsys, "classify", "--family", "all", str(DATA / "fig4.edges"))
    assert code == 0
    verdicts = json.loads(out)["verdicts"]
    assert verdicts["M11"]["accepted"] and verdicts["M12"]["accepted"]
    assert not verdicts["solvable"]["accepted"]


def test_text_output_agrees_with_json(capsys):
    code_j, out_j, _ = run(capsys, "classify", "--family", "M12", str(DATA / "fig4.edges"))
    code_t, out_t, _ = run(
        capsys, "--output", "text", "classify", "--family", "M12", str(DATA / "fig4.edges")
    )
    assert code_j == code_t == 0
    assert json.loads(out_j)["accepted"]
    assert "accept" in out_t


def test_as_prime_graph_flag(tmp_path, capsys):
    # a triangle is rejected as a complement but accepted as a prime
    # graph (its complement is empty)
    p = tmp_path / "tri.edges"
    p.write_text("a b\nb c\na c\n", encoding="utf-8")
    code_comp, _, _ = run(capsys, "classify", "--family", "solvable", str(p))
    code_prime, _, _ = run(
        capsys, "classify", "--family", "solvable", "--as-prime-graph", str(p)
    )
    assert code_comp == 1
    assert code_prime == 0


def test_construct_and_verify_blueprint(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--family", "PSL(3,5)", str(DATA / "fig2.edges"))
    assert code == 0
    bp_path = tmp_path / "bp.json"
    bp_path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify-blueprint", str(bp_path), str(DATA / "fig2.edges"))
    assert code == 0
    assert json.loads(out)["pass"]
    # against a different graph the evaluation must fail
    code, out, _ = run(capsys, "verify-blueprint", str(bp_path), str(DATA / "fig1.edges"))
    assert code == 1


def test_construct_rejected_graph(capsys):
    code, out, _ = run(capsys, "construct", "--family", "PSL(3,5)", str(DATA / "fig3.edges"))
    assert code == 1


def test_enumerate_solvable_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-vertices", "3", "--family", "solvable")
    assert code == 0
    data = json.loads(out)
    assert data["total_classes"] == {"1": 1, "2": 2, "3": 4}
    # all classes on 3 vertices except the triangle are solvable
    assert data["accepted"]["solvable"]["3"] == 3


def test_enumerate_containment(capsys):
    code, out, _ = run(
        capsys,
        "enumerate", "--max-vertices", "4", "--family", "solvable", "--family", "PSL(3,4)",
    )
    data = json.loads(out)
    assert data["solvable_contained_in_family"]["PSL(3,4)"]
    # the complete graph is PSL(3,4)-accepted on top of every solvable class
    assert data["accepted"]["PSL(3,4)"]["4"] > data["accepted"]["solvable"]["4"]


def test_criteria_subcommand(capsys):
    code, out, _ = run(capsys, "criteria", "A7")
    assert code == 0
    data = json.loads(out)
    assert data["allowed"] == [2, 5, 7]
    assert data["forbidden"] == {"3": "FC"}


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "M12")
    assert code == 0
    data = json.loads(out)
    assert data["shape_tag"] == "triangle-plus-pendant"
    assert sorted(map(tuple, data["complement"]["complement_edges"])) == [
        ("11", "2"), ("11", "3"), ("11", "5"), ("3", "5"),
    ]


def test_catalog_validate_and_list(capsys):
    code, out, _ = run(capsys, "catalog", "validate")
    assert code == 0 and json.loads(out)["violations"] == []
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "A7" in json.loads(out)["groups"]


def test_unknown_family_is_input_error(capsys, tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("a b\n", encoding="utf-8")
    code, _, err = run(capsys, "classify", "--family", "F4(2)", str(p))
    assert code == 2 and "error" in err


def test_malformed_graph_is_input_error(capsys, tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("a b c d\n", encoding="utf-8")
    code, _, err = run(capsys, "classify", "--family", "A7", str(p))
    assert code == 2


def test_missing_file_is_input_error(capsys):
    code, _, _ = run(capsys, "classify", "--family", "A7", "no-such-file.edges")
    assert code == 2


def test_byte_identical_output(capsys):
    _, out1, _ = run(capsys, "classify", "--family", "A7", str(DATA / "fig1.edges"))
    _, out2, _ = run(capsys, "classify", "--family", "A7", str(DATA / "fig1.edges"))
    assert out1 == out2
