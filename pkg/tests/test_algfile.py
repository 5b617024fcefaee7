"""File format: parse/print round trips, validation findings, substitution."""

import json

import pytest

from bihomcheck.algfile import parse_algebra_file, print_algebra_file, substitute_file
from bihomcheck.catalog import catalog_file, catalog_names
from bihomcheck.errors import (
    DenominatorVanishes,
    ParseError,
    UnboundParameter,
    ValidationError,
)


def test_catalog_files_parse_and_round_trip_byte_identically():
    for name in catalog_names():
        f = catalog_file(name)
        text = print_algebra_file(f)
        parsed = parse_algebra_file(text)
        again = print_algebra_file(parsed)
        assert again == text, f"round trip changed bytes for {name}"
        # a second cycle is also a fixed point
        assert print_algebra_file(parse_algebra_file(again)) == again


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as err:
        parse_algebra_file("{ not json ")
    assert err.value.line is not None


def example24_doc():
    return json.loads(print_algebra_file(catalog_file("example24")))


def test_out_of_range_triple_is_reported_with_path():
    doc = example24_doc()
    doc["objects"]["A"]["mult"].append([0, 7, 0, "1"])
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    assert any("objects.A.mult" in item and "(0,7,0)" in item for item in err.value.findings)


def test_missing_beta_is_reported():
    doc = example24_doc()
    del doc["objects"]["A"]["beta"]
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    assert any("beta required" in item for item in err.value.findings)


def test_bad_scalar_and_bad_action_collected_together():
    doc = example24_doc()
    doc["objects"]["A"]["alpha"][0][0] = "q + 1"  # undeclared parameter
    del doc["objects"]["A"]["action"]["g"]
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    findings = "\n".join(err.value.findings)
    assert "alpha" in findings and "action" in findings


def test_mult_and_bracket_are_mutually_exclusive():
    doc = example24_doc()
    doc["objects"]["A"]["bracket"] = []
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    assert any("exactly one of" in item for item in err.value.findings)


def test_bad_group_table_is_reported():
    doc = example24_doc()
    doc["hopf"]["group"]["table"] = [[1, 0], [0, 1]]
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    assert any("identity" in item for item in err.value.findings)


def test_substitute_file_full_binding():
    f = catalog_file("example24")
    g = substitute_file(f, {"b": 3})
    assert g.parameters == ()
    obj = g.objects["A"]
    assert str(obj.beta.at(1, 1)) == "3"
    assert str(obj.tensor[0][1][1]) == "3"


def test_substitute_file_rejects_unknown_name():
    f = catalog_file("example24")
    with pytest.raises(ValidationError):
        substitute_file(f, {"zz": 1})


def test_substitute_file_partial_binding_fails_when_parameters_occur():
    f = catalog_file("example25-twisted")
    with pytest.raises(UnboundParameter):
        substitute_file(f, {"l1": 2})


def test_substitute_file_pole_detection():
    doc = example24_doc()
    doc["objects"]["A"]["alpha"][0][0] = "1/b"
    f = parse_algebra_file(json.dumps(doc))
    with pytest.raises(DenominatorVanishes):
        substitute_file(f, {"b": 0})
    # nonzero binding is fine
    g = substitute_file(f, {"b": 2})
    assert str(g.objects["A"].alpha.at(0, 0)) == "1/2"


def test_raw_hopf_spec_round_trip():
    # kZ2 written out with raw tensors instead of a group table
    doc = {
        "format": "bihom-algebra-file/1",
        "name": "raw-kz2",
        "parameters": [],
        "hopf": {
            "raw": {
                "names": ["e", "g"],
                "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
                "unit": ["1", "0"],
                "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
                "counit": ["1", "1"],
                "antipode": [["1", "0"], ["0", "1"]],
            }
        },
        "rmatrix": [["1/2", "1/2"], ["1/2", "-1/2"]],
        "objects": {},
    }
    f = parse_algebra_file(json.dumps(doc))
    from bihomcheck.hopf import check_hopf_axioms

    assert check_hopf_axioms(f.hopf).ok
    text = print_algebra_file(f)
    assert print_algebra_file(parse_algebra_file(text)) == text


def test_wrong_format_marker_is_rejected():
    doc = example24_doc()
    doc["format"] = "something-else/9"
    with pytest.raises(ValidationError) as err:
        parse_algebra_file(json.dumps(doc))
    assert any("format" in item for item in err.value.findings)
