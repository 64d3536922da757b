import json

import pytest

import _germlink


def test_analyze_json_roundtrip():
    doc = json.loads(_germlink.analyze(2, 9, 2, chi_convention="both"))
    assert doc["schema_version"] == 1
    assert doc["params"]["delta"] == 1
    assert doc["seifert"]["orbits"][0] == {"alpha": 18, "beta": 5}
    assert doc["canonical"]["chi_plus_k2"]["num"] == "7"
    assert doc["obstruction"]["obstructed"] is True
    assert doc["verdicts"]["numerically_gorenstein"] is True


def test_seifert_invariants():
    data = _germlink.seifert_invariants(2, 5, 3)
    assert data["genus"] == 1
    assert data["e0"] == (-3, 10)
    assert data["orbits"] == [(5, 4), (2, 1)]
    assert data["dropped"] == [3]


def test_ncf():
    assert _germlink.ncf(14, 3) == [5, 3]
    assert _germlink.ncf(18, 13) == [2, 2, 3, 3]


def test_chi_milnor():
    assert _germlink.chi_milnor(2, 9, 2) == -7
    assert _germlink.chi_milnor(2, 9, 2, convention="join") == 9


def test_dot_and_markdown():
    dot = _germlink.plumbing_dot(2, 5, 3)
    assert dot.startswith("graph plumbing {")
    md = _germlink.analyze_markdown(2, 7, 2)
    assert "```dot" in md


def test_errors_surface_as_exceptions():
    with pytest.raises(_germlink.GermlinkError):
        _germlink.analyze(4, 6, 3)
    with pytest.raises(_germlink.GermlinkError):
        _germlink.ncf(4, 2)
