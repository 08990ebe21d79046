import json

import pytest

import sphanti


def test_catalog_keys():
    keys = sphanti.catalog_keys()
    assert "brion_5_2" in keys
    assert len(keys) == 8


def test_positive_roots_g2():
    r = sphanti.positive_roots("G2")
    assert len(r["roots"]) == 6
    assert r["rho"]["fund"] == ["1", "1"]


def test_kappa():
    assert sphanti.kappa("A4", ["a2", "a3"])["fund"] == ["4", "0", "0", "4"]


def test_coefficients():
    d = sphanti.Datum.from_catalog("brion_5_1", 4)
    assert d.coefficients() == [2, 2, 2]
    assert d.divisor() == "2*D1 + 2*D2 + 2*D3"
    assert sphanti.Datum.from_catalog("brion_5_4", 7).coefficients() == [6, 6]


def test_types_agree():
    d = sphanti.Datum.from_catalog("brion_5_2")
    assert d.types("luna") == ["a", "a", "a"]
    assert d.types("knop") == ["a", "a", "a"]
    n = sphanti.Datum.from_catalog("sl2_mod_N")
    assert n.types("knop") == ["2a"]


def test_uniqueness():
    d = sphanti.Datum.from_catalog("brion_5_3", 5)
    assert d.verify_decomposition()
    assert d.enumerate_positive_solutions(10) == [[1, 1, 1, 1]]
    assert d.uniqueness_certificate()["holds"]


def test_cone():
    d = sphanti.Datum.from_catalog("brion_5_2")
    assert len(d.valuation_cone()) == 3
    assert d.cone_contains(["-1", "-1", "-1"])
    assert not d.cone_contains(["1/2", "-3", "-3"])


def test_json_round_trip():
    d = sphanti.Datum.from_catalog("sl2_mod_T")
    text = d.to_json()
    assert json.loads(text)["version"] == "sphdatum/1"
    assert sphanti.Datum.from_json(text).to_json() == text


def test_errors():
    with pytest.raises(sphanti.ParseError):
        sphanti.Datum.from_json("{}")
    with pytest.raises(sphanti.InsufficientData):
        sphanti.Datum.from_catalog("brion_5_4").types("luna")
    with pytest.raises(ValueError):
        sphanti.Datum.from_catalog("nope")
