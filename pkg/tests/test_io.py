import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, strategies as st

from liemoduli.bouquet import assemble_sl3_slice, identify, validate_pattern
from liemoduli.errors import InputError, StructureError
from liemoduli.families import evaluate_family, rank_scan
from liemoduli.grassmann import INFINITY, canonicalize, limit_of_path
from liemoduli.integration import integrate_algebraic
from liemoduli.io import (
    algebra_from_json,
    algebra_to_json,
    bouquet_from_json,
    bouquet_to_json,
    dumps,
    encode,
    family_from_json,
    family_to_json,
    group_to_json,
    load_json,
    path_from_json,
    path_to_json,
    point_from_json,
    point_to_json,
    rat,
    report_to_json,
    resolve_algebra,
    span_rows,
)
from liemoduli.lie_core import borel, builtin, sl2, sl3
from oracles import rank

INPUTS = Path(__file__).parent / "data" / "inputs"
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_rat_refuses_floats_and_parses_strings():
    assert rat("-6/4") == Fraction(-3, 2)
    assert rat(7) == 7
    with pytest.raises(InputError):
        rat(0.25)
    assert encode({"a": (Fraction(1, 3), 2)}) == {"a": ["1/3", "2"]}


@pytest.mark.parametrize("name", ["sl2", "sl3", "gl2", "gl3"])
def test_algebra_round_trip(name):
    L = builtin(name)
    data = json.loads(dumps(algebra_to_json(L)))
    M = algebra_from_json(data)
    assert M.basis_names == L.basis_names
    assert M.structure_constants == L.structure_constants
    assert M.matrices == L.matrices


def test_algebra_input_errors():
    data = algebra_to_json(sl2())
    data["dim"] = 4
    with pytest.raises(InputError):
        algebra_from_json(data)
    data = algebra_to_json(sl2())
    data["brackets"][0][2][0][1] = "5"
    with pytest.raises(StructureError):
        algebra_from_json(data)
    with pytest.raises(InputError):
        resolve_algebra(str(INPUTS / "does_not_exist.json"))
    assert resolve_algebra("sl3").dim == 8


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3))
def test_point_round_trip(rows):
    assume(rank(rows) == len(rows))
    p = canonicalize(rows)
    assert point_from_json(json.loads(dumps(point_to_json(p)))) == p


def test_point_rank_claim_is_checked():
    with pytest.raises(InputError):
        point_from_json({"ambient_dim": 2, "k": 2, "rows": [["1", "0"], ["2", "0"]]})


def test_span_forms_agree():
    L = sl3()
    by_rows = span_rows({"rows": [[0, 0, 1, 0, 0, 0, 0, 0]]}, L)
    by_elem = span_rows({"elements": [{"E12": "1"}]}, L)
    by_mat = span_rows({"matrices": [[[0, 1, 0], [0, 0, 0], [0, 0, 0]]]}, L)
    assert canonicalize(by_rows) == canonicalize(by_elem) == canonicalize(by_mat)
    with pytest.raises(InputError):
        span_rows({"elements": [{"E99": 1}]}, L)
    with pytest.raises(InputError):
        span_rows({"matrices": [[[1, 0, 0], [0, 0, 0], [0, 0, 0]]]}, L)


@pytest.mark.parametrize("name", sorted(p.name for p in INPUTS.glob("span_*.json")))
def test_span_files_parse(name):
    obj = load_json(INPUTS / name)
    L = resolve_algebra(obj.get("algebra", "sl3"))
    assert span_rows(obj, L)


def test_family_round_trip():
    L = sl2()
    obj = load_json(INPUTS / "family_sl2_h_minus_2te.json")
    f = family_from_json(obj, L)
    g = family_from_json(json.loads(dumps(family_to_json(f))), L)
    assert g.path.entries == f.path.entries
    assert g.samples == f.samples and g.limit_points == f.limit_points
    assert report_to_json(rank_scan(g)) == report_to_json(rank_scan(f))
    assert report_to_json(rank_scan(f))["special"] == [["inf", 0]]


def test_adjoint_family_file():
    L = sl3()
    f = family_from_json(load_json(INPUTS / "family_sl3_conjugated_sl2.json"), L)
    assert evaluate_family(f, 0).dim == 3
    p = path_from_json(json.loads(dumps(path_to_json(f.path))), L)
    assert limit_of_path(p, INFINITY) == limit_of_path(f.path, INFINITY)


def test_inline_json_and_bad_json():
    assert load_json('{"a": 1}') == {"a": 1}
    with pytest.raises(InputError):
        load_json("{not json")


def test_group_json_is_deterministic():
    g = integrate_algebraic(borel(3))
    assert dumps(group_to_json(g)) == dumps(group_to_json(integrate_algebraic(borel(3))))
    assert group_to_json(g)["arity"] == 5


def test_slice_round_trip_preserves_classes():
    b = assemble_sl3_slice(2)
    data = json.loads(dumps(bouquet_to_json(b)))
    c = bouquet_from_json(data)
    assert [x.id for x in c.components()] == [x.id for x in b.components()]
    for pt in b.registered():
        assert identify(c, pt) == identify(b, pt)
    assert validate_pattern(c.pattern).passed
    again = bouquet_to_json(c)
    data.pop("validation")
    assert json.loads(dumps(again)) == data


def test_explicit_bouquet_files():
    ok = bouquet_from_json(load_json(INPUTS / "bouquet_three_consistent.json"))
    bad = bouquet_from_json(load_json(INPUTS / "bouquet_three_inconsistent.json"))
    assert validate_pattern(ok.pattern).passed
    r = validate_pattern(bad.pattern)
    assert not r.passed
    assert any(set(f.components) == {"X", "Y", "Z"} for f in r.failures)


def test_bouquet_unknown_component():
    data = bouquet_to_json(assemble_sl3_slice(1))
    data["overlaps"][0]["target"] = "nope"
    with pytest.raises(InputError):
        bouquet_from_json(data)
