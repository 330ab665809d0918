from fractions import Fraction

import pytest

import tdlc


def test_catalog_and_rationals():
    ids = tdlc.catalog_ids()
    assert "q2_half" in ids and "shift_z2" in ids
    assert '"id": "q2_half"' in tdlc.catalog_source("q2_half")
    assert tdlc.parse_rational("3/2^2") == Fraction(3, 4)


def test_values():
    assert tdlc.entropy("q2_half") == 2
    assert tdlc.scale("q2_half") == 2
    assert tdlc.nub("q2_half") == "trivial"
    assert tdlc.scale("laurent_z3") == 3
    # compact full shift: entropy log 2 with scale 1
    assert tdlc.entropy("shift_z2") == 2
    assert tdlc.scale("shift_z2") == 1
    assert tdlc.nub("shift_z2") == "whole"


def test_inline_scenario():
    sc = {"schema": 1, "id": "q3", "backend": "padic", "prime": 3, "dim": 1, "matrix": [["1/9"]],
          "compute": ["entropy", "scale"]}
    r = tdlc.report(sc)
    assert r["entropy"]["alpha"] == "9"
    assert r["scale"] == "9"
    assert r["status"] == "OK"


def test_invalid_input():
    with pytest.raises(ValueError):
        tdlc.report({"schema": 1, "id": "x", "backend": "padic", "prime": 4, "dim": 1, "matrix": [["2"]]})
    with pytest.raises(ValueError):
        tdlc.report("no_such_scenario")


def test_verify_suite():
    out = tdlc.verify("oracle")
    assert out["summary"]["fail"] == 0
    assert out["summary"]["pass"] >= 5
