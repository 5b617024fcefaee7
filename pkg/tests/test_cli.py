"""Command-line surface: exit codes, output shapes, golden reports."""

import json
import pathlib

import pytest

from bihomcheck.algfile import parse_algebra_file
from bihomcheck.catalog import catalog_names
from bihomcheck.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_lists_all_builtins(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in catalog_names():
        assert name in out


def test_catalog_json(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == 0
    doc = json.loads(out)
    assert [d["name"] for d in doc] == catalog_names()


def test_print_round_trips_catalog_entry(capsys, tmp_path):
    code, out, _ = run(capsys, "print", "example24")
    assert code == 0
    f = parse_algebra_file(out)
    assert f.name == "example24"
    # printing a parsed print is byte-identical
    p = tmp_path / "e24.json"
    p.write_text(out)
    code2, out2, _ = run(capsys, "print", str(p))
    assert code2 == 0 and out2 == out


def test_check_exit_zero_on_valid_instance(capsys):
    code, out, _ = run(capsys, "check", "kz2", "--suite", "hopf")
    assert code == 0
    assert "all checks passed" in out


def test_check_exit_one_on_axiom_failure(capsys, tmp_path):
    code, out, _ = run(capsys, "print", "example24")
    doc = json.loads(out)
    # break associativity of the object's product
    doc["objects"]["A"]["mult"] = [[0, 0, 0, "1"], [0, 1, 1, "b"], [1, 0, 1, "-1"], [1, 1, 0, "1"]]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", str(p), "--suite", "bihom-assoc")
    assert code == 1
    assert "FAIL" in out


def test_check_exit_two_on_bad_input(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ nope")
    code, _, err = run(capsys, "check", str(p))
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2


def test_construct_refusal_exit_three(capsys, tmp_path):
    out_path = tmp_path / "out.json"
    code, _, err = run(
        capsys,
        "construct",
        "example24",
        "--what",
        "commutator",
        "--set",
        "b=0",
        "--output",
        str(out_path),
    )
    assert code == 3
    assert "refused" in err and "bijective" in err


def test_construct_commutator_output_revalidates(capsys, tmp_path):
    out_path = tmp_path / "e24_bracket.json"
    code, _, _ = run(
        capsys, "construct", "example24", "--what", "commutator", "--output", str(out_path)
    )
    assert code == 0
    code, out, _ = run(capsys, "check", str(out_path), "--suite", "bihom-lie")
    assert code == 0
    # the computed table over Q(b) is identically zero
    doc = json.loads(out_path.read_text())
    assert doc["objects"]["A"]["bracket"] == []
    assert doc["parameters"] == ["b"]


def test_construct_twist_output(capsys, tmp_path):
    out_path = tmp_path / "twisted.json"
    code, _, _ = run(
        capsys,
        "construct",
        "example25-heisenberg",
        "--what",
        "twist",
        "--object",
        "L",
        "--output",
        str(out_path),
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["objects"]["L"]["bracket"] == [
        [0, 1, 2, "l1*l2p"],
        [1, 0, 2, "l2*l1p"],
    ]
    code, _, _ = run(capsys, "check", str(out_path), "--suite", "bihom-lie")
    assert code == 0


def test_check_with_numeric_substitution(capsys):
    code, out, _ = run(capsys, "check", "example24", "--suite", "all", "--set", "b=3")
    assert code == 0
    code, out, _ = run(capsys, "check", "example24", "--suite", "all", "--set", "b=5/7")
    assert code == 0


def test_structure_center_output(capsys):
    code, out, _ = run(
        capsys, "structure", "example25-heisenberg", "--what", "center", "--object", "L"
    )
    assert code == 0
    assert "center = span(x3)" in out


def test_structure_ideal_check_exit_codes(capsys):
    code, out, _ = run(
        capsys,
        "structure",
        "example25-heisenberg",
        "--what",
        "ideal-check",
        "--object",
        "L",
        "--space",
        "0,0,1",
    )
    assert code == 0
    code, out, _ = run(
        capsys,
        "structure",
        "example25-heisenberg",
        "--what",
        "ideal-check",
        "--object",
        "L",
        "--space",
        "1,0,0",
    )
    assert code == 1
    assert "FAIL" in out


def test_structure_closure(capsys):
    code, out, _ = run(
        capsys,
        "structure",
        "example25-heisenberg",
        "--what",
        "closure",
        "--object",
        "L",
        "--space",
        "1,0,0",
    )
    assert code == 0
    assert "closure = span(x1, x3)" in out


def test_unknown_object_is_input_error(capsys):
    code, _, err = run(
        capsys, "structure", "kz2", "--what", "center", "--object", "L"
    )
    assert code == 2


def test_trivial_one_dimensional_algebra_passes_everything(capsys, tmp_path):
    doc = {
        "format": "bihom-algebra-file/1",
        "name": "one-dim",
        "parameters": [],
        "hopf": {"group": {"names": ["e"], "table": [[0]], "identity": 0}},
        "rmatrix": [["1"]],
        "objects": {
            "A": {
                "basis": ["u"],
                "action": {"e": [["1"]]},
                "mult": [[0, 0, 0, "1"]],
                "alpha": [["1"]],
                "beta": [["1"]],
                "unit": ["1"],
            }
        },
    }
    p = tmp_path / "one.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", str(p), "--suite", "all")
    assert code == 0
    assert "all checks passed" in out


@pytest.mark.parametrize("name", catalog_names())
def test_golden_check_all_reports(capsys, name):
    code, out, _ = run(capsys, "check", name, "--suite", "all", "--json")
    assert code == 0
    expected = json.loads((GOLDEN / f"check_all_{name}.json").read_text())
    assert json.loads(out) == expected


@pytest.mark.parametrize(
    "name,what,extra",
    [
        ("example25-heisenberg", "center", ["--object", "L"]),
        ("example25-heisenberg", "derived-series", ["--object", "L"]),
        ("example25-heisenberg", "lcs", ["--object", "L", "--space", "0,0,1"]),
        ("example25-heisenberg", "certificate", ["--object", "L"]),
        ("example25-twisted", "center", ["--object", "L"]),
        ("example24", "certificate", ["--object", "A"]),
        ("cross-product-classical", "derived-series", ["--object", "L"]),
        ("trivial-hopf", "certificate", ["--object", "A"]),
    ],
)
def test_golden_structure_reports(capsys, name, what, extra):
    code, out, _ = run(capsys, "structure", name, "--what", what, "--json", *extra)
    assert code == 0
    expected = json.loads((GOLDEN / f"structure_{what}_{name}.json").read_text())
    assert json.loads(out) == expected
