import pytest
from hypothesis import given, settings, strategies as st

from multirel import (
    Environment, TermSyntaxError, UnboundVariable, Universe, UniverseMismatch,
    antidomain, domain, eval_term, format_term, parse_relation, parse_term, seq_compose,
)
from multirel.core import Multirelation
from multirel.terms import (
    Anti, BStar, Box, Dia, Dom, Par, Plus, Seq, Star, UnitPar, UnitSeq, Univ, Var, Zero,
)

R, S, T, P = Var("R"), Var("S"), Var("T"), Var("p")


@pytest.mark.parametrize("text, tree", [
    ("R ; S + T", Plus(Seq(R, S), T)),
    ("<R^*> p", Dia(Star(R), P)),
    ("a(R || S)", Anti(Par(R, S))),
    ("R + S + T", Plus(Plus(R, S), T)),
    ("R;S;T", Seq(Seq(R, S), T)),
    ("R ; S || T", Par(Seq(R, S), T)),
    ("R || S + T", Plus(Par(R, S), T)),
    ("[R] p ; S", Seq(Box(R, P), S)),
    ("d(R)^*", Star(Dom(R))),
    ("R^*^*", Star(Star(R))),
    ("bstar(R, S + T)", BStar(R, Plus(S, T))),
    ("0 + 1s + 1p + U", Plus(Plus(Plus(Zero(), UnitSeq()), UnitPar()), Univ())),
    ("<R><S> p", Dia(R, Dia(S, P))),
    ("d", Var("d")),
    ("a ; d", Seq(Var("a"), Var("d"))),
])
def test_parse(text, tree):
    assert parse_term(text) == tree


@pytest.mark.parametrize("text, position", [
    ("R +", 3),
    ("(R", 2),
    ("R ) S", 2),
    ("2", 0),
    ("R ; ; S", 4),
    ("<R p", 3),
    ("R ! S", 2),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(TermSyntaxError) as info:
        parse_term(text)
    assert info.value.position == position


def test_printer_uses_minimal_parentheses():
    assert format_term(parse_term("(R ; S) + T")) == "R ; S + T"
    assert format_term(parse_term("R ; (S + T)")) == "R ; (S + T)"
    assert format_term(parse_term("R ; (S ; T)")) == "R ; (S ; T)"
    assert format_term(parse_term("(R + S)^*")) == "(R + S)^*"
    assert format_term(parse_term("<R> (p ; q)")) == "<R> (p ; q)"


def _terms():
    leaves = st.sampled_from([Zero(), UnitSeq(), UnitPar(), Univ(), R, S, T, P])
    return st.recursive(leaves, lambda sub: st.one_of(
        st.builds(Plus, sub, sub), st.builds(Seq, sub, sub), st.builds(Par, sub, sub),
        st.builds(Dom, sub), st.builds(Anti, sub), st.builds(Star, sub),
        st.builds(BStar, sub, sub), st.builds(Dia, sub, sub), st.builds(Box, sub, sub),
    ), max_leaves=12)


@settings(max_examples=300, deadline=None)
@given(_terms())
def test_print_parse_round_trip(t):
    assert parse_term(format_term(t)) == t


U2 = Universe("ab")


def _env(**rels):
    return Environment(U2, {k: parse_relation(U2, v) for k, v in rels.items()})


def test_eval_examples():
    u = Universe("a")
    env = Environment(u, {"R": parse_relation(u, "a -> {}"), "p": parse_relation(u, "{}")})
    assert eval_term("d(R)", env) == parse_relation(u, "a -> {a}")
    assert eval_term("<R> p", env) == parse_relation(u, "a -> {a}")
    env = _env(R="a -> {a, b}, b -> {}")
    assert eval_term("R ; 1s", env) == env["R"]


def test_eval_errors():
    env = _env(R="a -> {a}")
    with pytest.raises(UnboundVariable):
        eval_term("R ; S", env)
    with pytest.raises(UniverseMismatch):
        env.bind("X", parse_relation(Universe("abc"), "a -> {}"))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255))
def test_modalities_on_arbitrary_second_argument(x, y):
    env = Environment(U2, {"x": Multirelation(U2, x), "y": Multirelation(U2, y)})
    assert eval_term("<x> y", env) == domain(seq_compose(env["x"], domain(env["y"])))
    box = eval_term("[x] y", env)
    assert box == antidomain(seq_compose(env["x"], antidomain(env["y"])))
    assert box == eval_term("a(x ; a(d(y)))", env)
