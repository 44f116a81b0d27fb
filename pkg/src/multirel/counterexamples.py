"""Stored witnesses: worked examples and counterexamples with their exact values.

Each entry fixes a universe and named relations, names the law it refutes
(if any) together with the variable assignment, and lists values to
reproduce.  A ``shown`` value is a known literal to match; a
``computed`` value has no literal counterpart and is recorded so
regressions show up.  Where the printed value is wrong, the
correct value is stored and the entry carries ``paper_discrepancy``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Multirelation, Universe
from .fileio import dumps_env, loads_env, parse_relation
from .laws import check_law, get_law
from .report import DisplayRecord, FailureWitness, LawRecord, SuiteReport
from .star import approx_power
from .terms import Environment, eval_term


@dataclass(frozen=True)
class Value:
    """A term (or ``power:R:n`` for an iteration power) and its expected value."""

    label: str
    expr: str
    expected: str | None
    source: str = "shown"
    paper_discrepancy: str | None = None


@dataclass(frozen=True)
class Compare:
    """An order relation between two terms: one of ``<``, ``<=``, ``=``, ``!=``."""

    left: str
    op: str
    right: str


@dataclass(frozen=True)
class Witness:
    name: str
    universe: tuple[str, ...]
    relations: dict[str, str]
    law_id: str | None = None
    assignment: dict[str, str] = field(default_factory=dict)
    values: tuple[Value, ...] = ()
    compares: tuple[Compare, ...] = ()
    paper_discrepancy: str | None = None

    def environment(self) -> Environment:
        u = Universe(self.universe)
        return Environment(u, {k: parse_relation(u, v) for k, v in self.relations.items()})

    def serialized(self) -> str:
        return dumps_env(self.environment())


def evaluate(expr: str, env: Environment) -> Multirelation:
    if expr.startswith("power:"):
        _, name, k = expr.split(":")
        return approx_power(env[name], int(k))
    return eval_term(expr, env)


def _holds(op: str, left: Multirelation, right: Multirelation) -> bool:
    return {
        "<": left < right,
        "<=": left <= right,
        "=": left == right,
        "!=": left != right,
    }[op]


V = Value
SEGERBERG_R = "a -> {b, c}, b -> {b}, b -> {c}, c -> {c}"
SEGERBERG_STAR = "a -> {a}, a -> {c}, a -> {b, c}, b -> {b}, b -> {c}, c -> {c}"
ASSOC_R = "a -> {a, b}, a -> {a}, b -> {a}"
ASSOC_S = "a -> {a}, a -> {b}"

WITNESSES: tuple[Witness, ...] = (
    Witness(
        "sequential composition example",
        ("a", "b", "c"),
        {"R": "a -> {b, c}", "S": "b -> {b}", "T": "b -> {b}, c -> {}"},
        values=(
            V("R;S", "R;S", "{}"),
            V("R;T", "R;T", "a -> {b}"),
            V("T;S", "T;S", "b -> {b}, c -> {}"),
        ),
    ),
    Witness(
        "parallel composition example",
        ("a", "b", "c"),
        {"R": "a -> {a, b}", "S": "a -> {b, c}, b -> {b}", "T": "b -> {}"},
        values=(
            V("R||S", "R || S", "a -> {a, b, c}"),
            V("S||T", "S || T", "b -> {b}"),
        ),
    ),
    Witness(
        "empty set is no right annihilator",
        ("a",),
        {"R": "a -> {}"},
        law_id="neg.right_annihilation",
        assignment={"x": "R"},
        values=(V("R;0", "R;0", "a -> {}"),),
        compares=(Compare("0", "<", "R;0"),),
    ),
    Witness(
        "sequential composition is not associative",
        ("a", "b"),
        {"R": ASSOC_R, "S": ASSOC_S},
        law_id="neg.seq_assoc",
        assignment={"x": "R", "y": "R", "z": "S"},
        values=(
            V("(R;R);S", "(R;R);S", "a -> {a}, a -> {b}, b -> {a}, b -> {b}"),
            V("R;(R;S)", "R;(R;S)", "a -> {a, b}, a -> {a}, a -> {b}, b -> {a}, b -> {b}"),
            V("R;R", "R;R", None, "computed"),
            V("R;S", "R;S", None, "computed"),
        ),
        compares=(Compare("(R;R);S", "<", "R;(R;S)"),),
    ),
    Witness(
        "three-fold self composition is not associative",
        ("a", "b", "c"),
        {"R": "a -> {c}, b -> {a, c}, c -> {b}, c -> {c}"},
        law_id="neg.seq_assoc",
        assignment={"x": "R", "y": "R", "z": "R"},
        values=(
            V("R;R", "R;R", "a -> {b}, a -> {c}, b -> {c}, b -> {b, c}, c -> {b}, c -> {c}, c -> {a, c}"),
            V("R;(R;R)", "R;(R;R)",
              "a -> {b}, a -> {c}, a -> {a, c}, b -> {b}, b -> {c}, b -> {a, c}, b -> {b, c}, "
              "b -> {a, b, c}, c -> {b}, c -> {c}, c -> {a, c}, c -> {b, c}"),
            V("(R;R);R", "(R;R);R",
              "a -> {b}, a -> {c}, a -> {a, c}, b -> {b}, b -> {c}, b -> {a, c}, b -> {a, b, c}, "
              "c -> {b}, c -> {c}, c -> {a, c}, c -> {b, c}",
              paper_discrepancy="printed with 10 pairs, omitting c -> {a, c}, which arises "
                                "from c -> {b} in R;R followed by b -> {a, c} in R"),
        ),
        compares=(Compare("(R;R);R", "<", "R;(R;R)"),),
    ),
    Witness(
        "left distributivity fails",
        ("a", "b"),
        {"R": "a -> {a, b}", "S": "a -> {a}", "T": "b -> {b}"},
        law_id="neg.left_distr",
        assignment={"x": "R", "y": "S", "z": "T"},
        values=(
            V("S+T", "S + T", "a -> {a}, b -> {b}"),
            V("R;(S+T)", "R;(S + T)", "a -> {a, b}"),
            V("R;S", "R;S", "{}"),
            V("R;T", "R;T", "{}"),
            V("R;S+R;T", "R;S + R;T", "{}"),
        ),
    ),
    Witness(
        "interaction law has no converse",
        ("a", "b"),
        {"R": "a -> {a}", "T": "a -> {a}, a -> {b}"},
        law_id="neg.interaction_converse",
        assignment={"x": "R", "y": "R", "z": "T"},
        values=(
            V("(R||R);T", "(R || R);T", "a -> {a}, a -> {b}"),
            V("(R;T)||(R;T)", "(R;T) || (R;T)", "a -> {a}, a -> {b}, a -> {a, b}"),
        ),
        compares=(Compare("(R || R);T", "<", "(R;T) || (R;T)"),),
        paper_discrepancy="printed witness names R={(a,{a})} and S={(a,{a}),(a,{b})} but "
                          "computes with T; the computation matches R=S={(a,{a})}, T as above",
    ),
    Witness(
        "diamond is not additive",
        ("a", "b"),
        {"R": "a -> {a, b}", "P": "a -> {a}", "Q": "b -> {b}"},
        law_id="neg.dia_additive",
        assignment={"x": "R", "p": "P", "q": "Q"},
        values=(
            V("<R>(P+Q)", "<R> (P + Q)", "a -> {a}",
              paper_discrepancy="printed as {(a,{a,b})}, which is R;(P+Q) rather than its domain"),
            V("<R>P+<R>Q", "<R> P + <R> Q", "{}"),
        ),
        compares=(Compare("<R> P + <R> Q", "<", "<R> (P + Q)"),),
        paper_discrepancy="printed witness binds P twice; the second binding is Q",
    ),
    Witness(
        "diamond is not strict",
        ("a",),
        {"R": "a -> {}"},
        law_id="neg.dia_strict",
        assignment={"x": "R"},
        values=(V("<R>0", "<R> 0", "a -> {a}"),),
    ),
    Witness(
        "box is not multiplicative",
        ("a", "b"),
        {"R": "a -> {a, b}", "P": "b -> {b}", "Q": "a -> {a}"},
        law_id="neg.box_mult",
        assignment={"x": "R", "p": "P", "q": "Q"},
        values=(
            V("[R](P;Q)", "[R] (P;Q)", "b -> {b}", "computed"),
            V("[R]P;[R]Q", "[R] P ; [R] Q", "a -> {a}, b -> {b}", "computed"),
        ),
        compares=(Compare("[R] (P;Q)", "<", "[R] P ; [R] Q"),),
    ),
    Witness(
        "box is not co-strict",
        ("a",),
        {"R": "a -> {}"},
        law_id="neg.box_costrict",
        assignment={"x": "R"},
        values=(V("[R]1s", "[R] 1s", "{}", "computed"),),
    ),
    Witness(
        "conjugation fails",
        ("a",),
        {"R": "a -> {}", "P": "a -> {a}"},
        law_id="neg.conjugation",
        assignment={"x": "R", "p": "P", "q": "P"},
        values=(
            V("<R>P;P", "<R> P ; P", "a -> {a}"),
            V("[R]P", "[R] P", "{}"),
            V("P;[R]P", "P ; [R] P", "{}"),
        ),
        compares=(Compare("P ; [R] P", "<", "<R> P ; P"),),
    ),
    Witness(
        "binary star differs from star then compose",
        ("a", "b"),
        {"R": ASSOC_R, "S": ASSOC_S},
        law_id="neg.bstar_fusion",
        assignment={"x": "R", "y": "S"},
        values=(
            V("R^*", "R^*", None, "computed"),
            V("R^*;S", "R^*;S", None, "computed"),
            V("bstar(R,S)", "bstar(R, S)", None, "computed"),
        ),
        compares=(Compare("R^*;S", "<", "bstar(R, S)"),),
    ),
    Witness(
        "Segerberg's axiom fails",
        ("a", "b", "c"),
        {"R": SEGERBERG_R, "P": "c -> {c}"},
        law_id="neg.segerberg",
        assignment={"x": "R", "p": "P"},
        values=(
            V("R;P", "R;P", "b -> {c}, c -> {c}"),
            V("<R>P", "<R> P", "b -> {b}, c -> {c}"),
            V("<R>P-P", "<R> P ; a(P)", "b -> {b}"),
            V("R;0", "R;0", "{}"),
            V("R^(1)", "power:R:1", "a -> {a}, b -> {b}, c -> {c}"),
            V("1s+R;(1s+R)", "1s + R;(1s + R)", SEGERBERG_STAR),
            V("1s+R;(1s+R;(1s+R))", "1s + R;(1s + R;(1s + R))", SEGERBERG_STAR),
            V("R^(2)", "power:R:2", "a -> {a}, a -> {b, c}, b -> {b}, b -> {c}, c -> {c}",
              paper_discrepancy="the printed R^(2) is 1σ+R·(1σ+R), which is R^(3) under "
                                "R^(n+1) = 1σ+R·R^(n); by that recursion R^(2) = 1σ+R"),
            V("R^(3)", "power:R:3", SEGERBERG_STAR),
            V("R^(4)", "power:R:4", SEGERBERG_STAR),
            V("R^*", "R^*", SEGERBERG_STAR),
            V("<R^*>(<R>P-P)", "<R^*> (<R> P ; a(P))", "b -> {b}"),
            V("P+<R^*>(<R>P-P)", "P + <R^*> (<R> P ; a(P))", "b -> {b}, c -> {c}"),
            V("R^*;P", "R^*;P", "a -> {c}, b -> {c}, c -> {c}"),
            V("<R^*>P", "<R^*> P", "a -> {a}, b -> {b}, c -> {c}"),
        ),
        compares=(
            Compare("P + <R^*> (<R> P ; a(P))", "<", "<R^*> P"),
            Compare("1s + R;(1s + R)", "=", "R^*"),
        ),
    ),
    Witness(
        "box form of Segerberg's axiom fails",
        ("a", "b", "c"),
        {"R": SEGERBERG_R, "P": "a -> {a}, b -> {b}"},
        law_id="neg.segerberg_box",
        assignment={"x": "R", "p": "P"},
        values=(
            V("P;[R^*](a(P)+[R]P)", "P ; [R^*] (a(P) + [R] P)", "a -> {a}", "computed"),
            V("[R^*]P", "[R^*] P", "{}", "computed"),
        ),
        compares=(Compare("[R^*] P", "<", "P ; [R^*] (a(P) + [R] P)"),),
    ),
    Witness(
        "box of a parallel composition",
        ("a",),
        {"R": "a -> {}", "S": "a -> {a}", "P": "a -> {a}"},
        law_id="neg.box_par_mult",
        assignment={"x": "R", "y": "S", "p": "P"},
        values=(
            V("[R||S]P", "[R || S] P", "a -> {a}", "computed"),
            V("[R]P;[S]P", "[R] P ; [S] P", "{}", "computed"),
            V("[R]P+[S]P", "[R] P + [S] P", "a -> {a}", "computed"),
        ),
        paper_discrepancy="the printed box law for parallel composition uses a product; "
                          "this witness refutes it and the sum form holds",
    ),
    Witness(
        "parallel distributivity as printed",
        ("a",),
        {"X": "a -> {}", "Y": "a -> {a}"},
        law_id="neg.par_distr_misprint",
        assignment={"x": "X", "y": "Y", "z": "Y"},
        values=(
            V("X||(Y+Y)", "X || (Y + Y)", "a -> {a}", "computed"),
            V("X;Y+X;Y", "X;Y + X;Y", "a -> {}", "computed"),
        ),
        paper_discrepancy="refutes the printed right-hand side x·y+x·z",
    ),
    Witness(
        "diamond star unfold as printed",
        ("a",),
        {"R": "{}", "P": "{}"},
        law_id="neg.dia_star_unfold_misprint",
        assignment={"x": "R", "p": "P"},
        values=(
            V("1s+<R><R^*>P", "1s + <R> <R^*> P", "a -> {a}", "computed"),
            V("<R^*>P", "<R^*> P", "{}", "computed"),
        ),
        paper_discrepancy="refutes the printed unfold law with 1σ in place of p",
    ),
    Witness(
        "box star unfold as printed",
        ("a",),
        {"R": "{}", "P": "{}"},
        law_id="neg.box_star_unfold_misprint",
        assignment={"x": "R", "p": "P"},
        values=(
            V("1s;[R][R^*]P", "1s ; [R] [R^*] P", "a -> {a}", "computed"),
            V("[R^*]P", "[R^*] P", "{}", "computed"),
        ),
        paper_discrepancy="refutes the printed unfold law with 1σ in place of p",
    ),
)


def witnesses_for(law_id: str) -> list[Witness]:
    return [w for w in WITNESSES if w.law_id == law_id]


def get_witness(name: str) -> Witness:
    for w in WITNESSES:
        if w.name == name:
            return w
    raise KeyError(f"no stored witness named {name!r}")


def replay(w: Witness) -> tuple[LawRecord | None, list[DisplayRecord]]:
    """Re-evaluate one witness: its law verdict and every stored value."""
    env = w.environment()
    displays = []
    for v in w.values:
        observed = evaluate(v.expr, env)
        if v.expected is None:
            ok, expected = True, None
        else:
            expected_rel = parse_relation(env.universe, v.expected)
            ok, expected = observed == expected_rel, str(expected_rel)
        displays.append(DisplayRecord(
            w.name, v.label, expected, str(observed), ok,
            v.source if v.expected is not None else "computed", v.paper_discrepancy,
        ))
    for c in w.compares:
        ok = _holds(c.op, evaluate(c.left, env), evaluate(c.right, env))
        displays.append(DisplayRecord(w.name, f"{c.left} {c.op} {c.right}", None, "", ok, "relation"))
    # the stored environment must survive a save/load round trip
    if loads_env(w.serialized()).bindings != env.bindings:
        displays.append(DisplayRecord(w.name, "serialization round trip", None, "", False, "relation"))
    if w.law_id is None:
        return None, displays
    law = get_law(w.law_id)
    verdict = check_law(law, env, w.assignment)
    record = LawRecord(
        id=law.id, anchor=law.anchor, polarity=law.polarity, mode="witness",
        samples=1, failures=0 if verdict.holds else 1,
        paper_discrepancy=law.paper_discrepancy or w.paper_discrepancy,
        witness=FailureWitness(
            bindings={var: str(env[name]) for var, name in sorted(w.assignment.items())},
            lhs=str(verdict.lhs), rhs=str(verdict.rhs), universe=list(w.universe),
        ),
    )
    return record, displays


def run_counterexamples() -> SuiteReport:
    report = SuiteReport(config={"registry": "counterexamples", "witnesses": len(WITNESSES)})
    for w in WITNESSES:
        record, displays = replay(w)
        report.displays.extend(displays)
        if record is not None:
            report.records.append(record)
    return report
