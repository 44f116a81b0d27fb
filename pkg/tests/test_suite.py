import json

import pytest

from multirel.laws import EXHAUSTIVE_LIMIT, get_law, space_size
from multirel.report import FailureWitness, LawRecord, SuiteReport
from multirel.suite import SuiteConfig, check_valid, run_suite


def test_one_element_sweep_is_exhaustive():
    report = run_suite(SuiteConfig(size=1))
    assert report.ok
    assert {r.mode for r in report.records} == {"exhaustive", "witness"}


def test_seq_assoc_refuted_by_stored_witness():
    report = run_suite(SuiteConfig(size=2, filter="neg.seq_assoc"))
    (record,) = report.records
    assert record.mode == "witness" and record.ok and record.failures == 2


def test_large_spaces_fall_back_to_sampling():
    law = get_law("proto.plus_assoc")
    assert space_size(law, 2) > EXHAUSTIVE_LIMIT
    record = check_valid(law, SuiteConfig(size=2, samples=50))
    assert record.mode == "random" and record.samples == 50


def test_star_laws_at_three_elements():
    report = run_suite(SuiteConfig(size=3, mode="random", samples=200, filter="star."))
    assert report.ok and len(report.records) >= 15


def test_reports_are_deterministic():
    cfg = SuiteConfig(size=3, mode="random", seed=9, samples=40, filter="dp")
    a, b = run_suite(cfg), run_suite(cfg)
    assert a.to_text() == b.to_text()
    assert a.to_json() == b.to_json()
    other = run_suite(SuiteConfig(size=3, mode="random", seed=10, samples=40, filter="dp"))
    assert other.to_text() != a.to_text()


def test_json_shape():
    doc = json.loads(run_suite(SuiteConfig(size=1, filter="proto.")).to_json())
    assert doc["verdict"] == "PASS"
    assert doc["config"]["size"] == 1
    first = doc["laws"][0]
    for key in ("id", "anchor", "polarity", "samples", "failures", "witness"):
        assert key in first


def test_verdict_rules():
    w = FailureWitness({"x": "{}"}, "{}", "{ a -> {a} }", ["a"])
    bad_valid = LawRecord("v", "", "expected-valid", "exhaustive", 4, 1, witness=w)
    unrefuted = LawRecord("n", "", "expected-refutable", "witness", 1, 0)
    good = LawRecord("g", "", "expected-valid", "exhaustive", 4, 0)
    assert not SuiteReport({}, [good, bad_valid]).ok
    assert not SuiteReport({}, [good, unrefuted]).ok
    assert SuiteReport({}, [good]).ok
    text = SuiteReport({}, [bad_valid]).to_text()
    assert "lhs = {}" in text and "FAIL" in text


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(mode="sideways")
    with pytest.raises(ValueError):
        SuiteConfig(size=0)
