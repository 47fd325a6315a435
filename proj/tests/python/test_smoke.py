import pytest

import locgad

F = "x^2*y + x*y*z + y^3"


def test_minimal_supports_running_example():
    out = locgad.minimal_supports(F)
    assert out["rank"] == 4
    assert out["support_count"] == 3
    forms = sorted(r["linear_form"] for r in out["chart_reports"])
    assert forms == ["x", "x + z", "y"]
    assert out["chart_reports"][0]["hilbert"] == {"values": [1, 3, 4, 4], "stable": True}


def test_single_chart_points():
    out = locgad.minimal_supports(F, charts="x", strategy="A", seed=5)
    assert [r["point"] for r in out["chart_reports"]] == [["0", "0"], ["0", "1"]]


def test_stratify_conic_locus():
    out = locgad.stratify("x*y + x*z + y*z")
    assert out["minimal_rank"] == 3
    assert out["strata"][0]["status"] == "locus"
    assert out["strata"][-1] == {"rank": 4, "status": "generic"}


def test_apolar_scheme_and_matrices():
    out = locgad.apolar_scheme(F, "y")
    assert out["hilbert"]["values"] == [1, 3, 4, 4]
    assert out["length"] == 4
    m = locgad.inverse_matrix(F)
    assert len(m) == 10 and m[0][1] == "2"
    assert locgad.catalecticant(F, 3) == [["0", "2", "0", "0", "1", "0", "6", "0", "0", "0"]]
    assert locgad.embed_check(F)
    assert locgad.generic_local_rank(2, 4) == 9


def test_errors_are_raised():
    with pytest.raises(ValueError):
        locgad.minimal_supports("x^2 + y")
    with pytest.raises(ValueError):
        locgad.minimal_supports(F, charts="w")
