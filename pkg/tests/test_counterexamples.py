import pytest

from multirel import loads_env, parse_relation
from multirel.counterexamples import WITNESSES, evaluate, get_witness, replay, run_counterexamples


@pytest.mark.parametrize("witness", WITNESSES, ids=lambda w: w.name)
def test_witness_replays(witness):
    record, displays = replay(witness)
    assert all(d.ok for d in displays), [d.line() for d in displays if not d.ok]
    if witness.law_id is not None:
        assert record.ok and record.failures == 1


@pytest.mark.parametrize("witness", WITNESSES, ids=lambda w: w.name)
def test_witness_serialization(witness):
    env = witness.environment()
    again = loads_env(witness.serialized())
    assert again.universe == env.universe and again.bindings == env.bindings


def _value(name, label):
    w = get_witness(name)
    env = w.environment()
    v = next(v for v in w.values if v.label == label)
    return evaluate(v.expr, env), env.universe


def test_segerberg_inclusion_values():
    star_p, u = _value("Segerberg's axiom fails", "<R^*>P")
    rhs, _ = _value("Segerberg's axiom fails", "P+<R^*>(<R>P-P)")
    assert star_p == parse_relation(u, "a -> {a}, b -> {b}, c -> {c}")
    assert rhs == parse_relation(u, "b -> {b}, c -> {c}")
    assert rhs < star_p


def test_associativity_sets():
    left, u = _value("sequential composition is not associative", "(R;R);S")
    right, _ = _value("sequential composition is not associative", "R;(R;S)")
    assert left == parse_relation(u, "a -> {a}, a -> {b}, b -> {a}, b -> {b}")
    assert right - left == parse_relation(u, "a -> {a, b}")


def test_conjugation_values():
    lhs, u = _value("conjugation fails", "<R>P;P")
    rhs, _ = _value("conjugation fails", "P;[R]P")
    assert lhs == parse_relation(u, "a -> {a}") and rhs.bits == 0


def test_three_element_example_pair_counts():
    big, _ = _value("three-fold self composition is not associative", "R;(R;R)")
    small, _ = _value("three-fold self composition is not associative", "(R;R);R")
    assert (len(big), len(small)) == (12, 11)
    assert small < big


def test_discrepancies_are_annotated():
    w = get_witness("three-fold self composition is not associative")
    assert any(v.paper_discrepancy for v in w.values)
    w = get_witness("diamond is not additive")
    assert w.paper_discrepancy


def test_report():
    report = run_counterexamples()
    assert report.ok
    text = report.to_text()
    for w in WITNESSES:
        assert f"== {w.name}" in text
    assert text == run_counterexamples().to_text()
