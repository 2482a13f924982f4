"""Smoke tests for the python bindings."""

from fractions import Fraction

import trigcert


def frac(text):
    return Fraction(text)


def test_certify_sine_nonnegative():
    assert trigcert.certify_sine(["5/4", "1", "1/4"])["status"] == "nonnegative"
    assert trigcert.certify_sine(["1", "1", "1", "1/2"])["status"] == "nonnegative"


def test_certify_sine_negative_witness():
    verdict = trigcert.certify_sine(["1", "1", "1", "3/5"])
    assert verdict["status"] == "negative"
    assert frac(verdict["witness"]) == -1
    assert frac(verdict["witness_value"]) == Fraction(-2, 5)


def test_certify_interval_method():
    assert trigcert.certify_sine(["-1"], method="interval")["status"] == "negative"
    assert (
        trigcert.certify_sine(["3", "2", "1"], method="interval", max_depth=12)["status"]
        == "nonnegative"
    )


def test_certify_cosine():
    assert trigcert.certify_cosine(["1", "1"])["status"] == "nonnegative"
    assert trigcert.certify_cosine(["1/2", "1"])["status"] == "negative"


def test_criteria_report():
    report = trigcert.criteria(["1", "1", "1", "1/2"])
    assert report["belov_ok"] is False
    assert report["fejer_ok"] is True
    assert report["nec_at_pi"]["first_sum"] == "0"
    assert report["nec_at_pi"]["third_sum"] == "-12"
    assert report["necessary_pass"] is True


def test_family_coefficients():
    assert trigcert.family("phi:5") == ["5/4", "1", "1", "1", "7/20"]
    assert trigcert.family("theta-:2") == ["2", "-1"]


def test_kappa0_closed_forms():
    line = trigcert.kappa0(3, "0")
    assert line["method"] == "closed_form_line"
    assert frac(line["kappa0_lo"]) == 2

    curve = trigcert.kappa0(3, "1")
    assert frac(curve["kappa0_lo"]) == Fraction(5, 4)

    even = trigcert.kappa0(4, "1")
    assert frac(even["kappa0_lo"]) == 3


def test_kappa0_bisection_brackets_the_boundary():
    point = trigcert.kappa0(5, "2/5", tol="1/100000", force_bisection=True)
    lo, hi = frac(point["kappa0_lo"]), frac(point["kappa0_hi"])
    assert hi - lo <= Fraction(1, 100000)
    assert trigcert.membership(5, point["kappa0_hi"], "2/5")["status"] == "nonnegative"
    assert trigcert.membership(5, point["kappa0_lo"], "2/5")["status"] == "negative"


def test_boundary_sweep_rows():
    rows = trigcert.boundary_sweep(4, "1/2", "3/2", 3)
    assert [frac(r["kappa0_lo"]) for r in rows] == [1, 3, 5]


def test_characterizations_match_certification():
    for a, b, c in [("1", "1", "1/2"), ("5/4", "1", "1/4"), ("99/100", "1", "1/2"), ("1", "-2", "0")]:
        sine_claim = trigcert.characterize_sine3(a, b, c)
        sine_truth = trigcert.certify_sine([a, b, c])["status"] == "nonnegative"
        assert sine_claim == sine_truth
        cos_claim = trigcert.characterize_cosine2(a, b, c)
        cos_truth = trigcert.certify_cosine([a, b, c])["status"] == "nonnegative"
        assert cos_claim == cos_truth


def test_enclosures():
    assert trigcert.sin_enclosure("1", "1") == ("5/6", "101/120")
    assert trigcert.cos_enclosure("0", "0") == ("1", "1")


def test_eval_sine():
    assert abs(trigcert.eval_sine(["1"], 3.14159265358979 / 2) - 1.0) < 1e-9
