import cmath

import pytest

import cmreal

PAIR_N1 = {"X": {"re": [["2"]]}, "Z": {"re": [["3"]]}}
PAIR_N2 = {
    "X": {"re": [["1", "0"], ["0", "-1"]]},
    "Z": {"re": [["0", "1/2"], ["-1/2", "0"]]},
}


def test_tau_one_by_one():
    assert cmreal.tau(PAIR_N1, 3) == "2 + t1 - 6 t2 + 27 t3"


def test_validate_accepts_json_text_and_rejects_rank_two():
    assert cmreal.validate('{"X": {"re": [["2"]]}, "Z": {"re": [["3"]]}}')["n"] == 1
    with pytest.raises(cmreal.NotCMPairError):
        cmreal.validate({"X": {"re": [["1", "0"], ["0", "2"]]}, "Z": {"re": [["1", "0"], ["0", "1"]]}})


def test_malformed_json_reports_location():
    with pytest.raises(cmreal.ParseError, match="byte"):
        cmreal.validate('{"X": [}')


def test_chart_round_trip():
    chart = cmreal.pair_to_chart(PAIR_N2)
    assert [l["re"] for l in chart["lambda"]] == ["-1", "1"]
    back = cmreal.pair_to_chart(cmreal.chart_to_pair(chart))
    assert back == chart


def test_fiber_degree_and_reality():
    charts = cmreal.fiber([1.0, -0.5, 2.0], [0.25, 1.0, -3.0])
    assert len(charts) == 6
    for lam, alpha in charts:
        assert len(lam) == 3
        # real spectra: every fiber point has real alpha up to rounding
        assert all(abs(a.imag) < 1e-8 for a in alpha), alpha
        # trace Z = sum alpha = sum of the Z spectrum
        assert cmath.isclose(sum(alpha), -1.75, abs_tol=1e-9)


def test_bispectral_and_wave():
    assert cmreal.bispectral_symmetric(PAIR_N2, 5)
    assert cmreal.wave(PAIR_N1, 2) == ["1", "(-1)/(2 + x)", "(3)/(2 + x)"]


def test_schur_and_coro_schur():
    assert cmreal.schur([2, 1]) == "-p3 + 1/3 p1^3"
    r = cmreal.coro_schur([2, 1], ["1", "0", "0"])
    assert r["hypothesis"] and r["conclusion"]
    assert r["depended"] == [1, 3]


def test_dunkl_relations_hold():
    r = cmreal.dunkl(["0", "1", "3"], ["1/2", "-1", "2"])
    assert r["dim"] == 6
    assert r["relations_violated"] == []
    # e-bar V has dimension n!/(n-1)! = n and carries a rank-one pair
    assert r["pair"]["n"] == 3
    assert cmreal.validate(r["pair"])["n"] == 3


def test_space_wronskian():
    space = {"spaces": [{"mu": "0", "basis": [["0", "1"], ["0", "0", "1"]]}, {"mu": "1", "basis": [["1"]]}]}
    assert cmreal.normalized_wronskian(space) == "2 - 2 x + x^2"
    assert cmreal.real_span(space)


def test_harness_suite_passes():
    s = cmreal.run_criterion(5, seed=7, threads=1)
    assert s["passed"] and s["failed"] == 0
