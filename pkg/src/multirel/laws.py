"""Registry of axioms, derived laws and known-false laws over multirelations.

A law is either a *statement* in the term syntax, related by ``=``,
``<=``, ``=>`` (implication between two relations) or ``<=>``, or a custom
predicate for facts that are not equations between terms.  Variables
``p``, ``q`` and ``r`` range over subidentities; every other variable
ranges over all multirelations.

Implication laws are mostly vacuous on uniform samples, so some laws carry
a *bias*: a function that rewrites part of a sampled environment into one
that satisfies the premise.  Biased and unbiased draws are mixed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from . import bits
from .core import Multirelation, Universe
from .errors import ConstraintError, UnboundVariable
from .terms import (
    Anti, BStar, Box, Dia, Dom, Model, Par, Plus, RelModel, Seq, Star, Term, Univ,
    UnitPar, UnitSeq, Var, Zero, Environment, compile_term, operators, parse_term, variables,
)

VALID = "expected-valid"
REFUTABLE = "expected-refutable"
SUBID_VARS = frozenset({"p", "q", "r"})

#: Above this many environments a law is sampled even in exhaustive mode.
EXHAUSTIVE_LIMIT = 1 << 17


# formulas ----------------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    op: str  # "=" or "<="
    left: Term
    right: Term


@dataclass(frozen=True)
class Implies:
    premise: Relation
    conclusion: Relation


@dataclass(frozen=True)
class Iff:
    left: Relation
    right: Relation


Formula = Relation | Implies | Iff


def _parse_relation(text: str) -> Relation:
    for op in (" <= ", " = "):
        if op in text:
            lhs, rhs = text.split(op, 1)
            return Relation(op.strip(), parse_term(lhs), parse_term(rhs))
    raise ValueError(f"no relation symbol in {text!r}")


def parse_formula(text: str) -> Formula:
    if " <=> " in text:
        lhs, rhs = text.split(" <=> ", 1)
        return Iff(_parse_relation(lhs), _parse_relation(rhs))
    if " => " in text:
        lhs, rhs = text.split(" => ", 1)
        return Implies(_parse_relation(lhs), _parse_relation(rhs))
    return _parse_relation(text)


def _relations(f: Formula) -> tuple[Relation, ...]:
    if isinstance(f, Relation):
        return (f,)
    if isinstance(f, Implies):
        return (f.premise, f.conclusion)
    return (f.left, f.right)


def formula_variables(f: Formula) -> set[str]:
    out: set[str] = set()
    for rel in _relations(f):
        out |= variables(rel.left) | variables(rel.right)
    return out


# unicode rendering, used for anchors -------------------------------------------

_LEVEL = {Plus: 1, Par: 2, Seq: 3, Dia: 4, Box: 4, Star: 5}


def _u(t: Term, floor: int = 0) -> str:
    text = _u_raw(t)
    return f"({text})" if _LEVEL.get(type(t), 6) < floor else text


def _u_raw(t: Term) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, UnitSeq):
        return "1σ"
    if isinstance(t, UnitPar):
        return "1π"
    if isinstance(t, Univ):
        return "U"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Plus):
        return f"{_u(t.left, 1)}+{_u(t.right, 2)}"
    if isinstance(t, Par):
        return f"{_u(t.left, 2)}‖{_u(t.right, 3)}"
    if isinstance(t, Seq):
        return f"{_u(t.left, 3)}·{_u(t.right, 4)}"
    if isinstance(t, Dia):
        return f"⟨{_u(t.left)}⟩{_u(t.right, 4)}"
    if isinstance(t, Box):
        return f"[{_u(t.left)}]{_u(t.right, 4)}"
    if isinstance(t, Star):
        return f"{_u(t.arg, 5)}*"
    if isinstance(t, Dom):
        return f"d({_u(t.arg)})"
    if isinstance(t, Anti):
        return f"a({_u(t.arg)})"
    if isinstance(t, BStar):
        return f"({_u(t.left, 5)}* {_u(t.right, 5)})"
    raise TypeError(t)


def render_formula(f: Formula) -> str:
    def rel(r: Relation) -> str:
        return f"{_u(r.left)} {'≤' if r.op == '<=' else '='} {_u(r.right)}"
    if isinstance(f, Relation):
        return rel(f)
    if isinstance(f, Implies):
        return f"{rel(f.premise)} ⇒ {rel(f.conclusion)}"
    return f"{rel(f.left)} ⇔ {rel(f.right)}"


# laws ------------------------------------------------------------------------

#: (holds, lhs, rhs, premise_held).  ``premise_held`` is None for plain laws.
Outcome = tuple[bool, int, int, "bool | None"]
Custom = Callable[[int, Mapping[str, int]], Outcome]
Bias = Callable[[dict, random.Random, int], None]


@dataclass(frozen=True)
class Law:
    id: str
    group: str
    statement: str
    polarity: str = VALID
    custom: Custom | None = None
    custom_vars: tuple[str, ...] = ()
    anchor_text: str | None = None
    bias: Bias | None = None
    paper_discrepancy: str | None = None
    formula: Formula | None = field(default=None, compare=False)

    @property
    def variables(self) -> tuple[str, ...]:
        if self.custom is not None:
            return self.custom_vars
        return tuple(sorted(formula_variables(self.formula)))

    @property
    def subid_variables(self) -> tuple[str, ...]:
        return tuple(v for v in self.variables if v in SUBID_VARS)

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def anchor(self) -> str:
        if self.anchor_text is not None:
            return self.anchor_text
        return render_formula(self.formula)

    @property
    def uses_star(self) -> bool:
        if self.group.startswith("star") or self.group in ("dp.star", "ap.star"):
            return True
        if self.formula is None:
            return False
        ops: set[type] = set()
        for rel in _relations(self.formula):
            ops |= operators(rel.left) | operators(rel.right)
        return bool(ops & {Star, BStar})

    def evaluator(self, n: int) -> Callable[[Mapping[str, int]], Outcome]:
        if self.custom is not None:
            custom = self.custom
            return lambda env: custom(n, env)
        return compile_formula(self.formula, RelModel(n))


def _compile_relation(rel: Relation, model: Model):
    f = compile_term(rel.left, model)
    g = compile_term(rel.right, model)
    if rel.op == "=":
        def check(env):
            lhs, rhs = f(env), g(env)
            return lhs == rhs, lhs, rhs
    elif isinstance(model, RelModel):
        def check(env):
            lhs, rhs = f(env), g(env)
            return lhs & ~rhs == 0, lhs, rhs
    else:
        le = model.le

        def check(env):
            lhs, rhs = f(env), g(env)
            return le(lhs, rhs), lhs, rhs
    return check


def compile_formula(formula: Formula, model: Model):
    """Compile to ``env -> (holds, lhs, rhs, premise_held)`` over any :class:`Model`."""
    if isinstance(formula, Relation):
        check = _compile_relation(formula, model)

        def plain(env):
            ok, lhs, rhs = check(env)
            return ok, lhs, rhs, None
        return plain
    if isinstance(formula, Implies):
        premise = _compile_relation(formula.premise, model)
        conclusion = _compile_relation(formula.conclusion, model)

        def implication(env):
            held, plhs, prhs = premise(env)
            if not held:
                return True, plhs, prhs, False
            ok, lhs, rhs = conclusion(env)
            return ok, lhs, rhs, True
        return implication
    left = _compile_relation(formula.left, model)
    right = _compile_relation(formula.right, model)

    def equivalence(env):
        a, lhs, rhs = left(env)
        b, _, _ = right(env)
        return a == b, lhs, rhs, None
    return equivalence


def make_law(id: str, statement: str, group: str | None = None, **kw) -> Law:
    group = group or id.rsplit(".", 1)[0]
    if kw.get("custom") is None:
        kw["formula"] = parse_formula(statement)
    return Law(id=id, group=group, statement=statement, **kw)


# verdicts ----------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    law_id: str
    holds: bool
    lhs: Multirelation
    rhs: Multirelation
    premise_held: bool | None = None

    @property
    def vacuous(self) -> bool:
        return self.premise_held is False


def check_law(law: Law, env: Environment, assignment: Mapping[str, str] | None = None) -> Verdict:
    """Evaluate ``law`` once.  ``assignment`` maps law variables to binding names."""
    u = env.universe
    u.check_size()
    raw = {}
    for var in law.variables:
        name = assignment.get(var, var) if assignment else var
        if name not in env.bindings:
            raise UnboundVariable(name)
        value = env.bindings[name].bits
        if var in SUBID_VARS and not bits.is_subid(u.size, value):
            raise ConstraintError(f"variable {var!r} of {law.id} must be a subidentity")
        raw[var] = value
    holds, lhs, rhs, premise = law.evaluator(u.size)(raw)
    return Verdict(law.id, holds, Multirelation(u, lhs), Multirelation(u, rhs), premise)


# generators ----------------------------------------------------------------

def gen_multirelations(
    u: Universe,
    mode: str = "exhaustive",
    seed: int | str = 0,
    count: int = 100,
    max_size: int = 2,
) -> Iterator[Multirelation]:
    """All multirelations over ``u`` in bit order, or ``count`` seeded uniform draws."""
    u.check_size()
    width = u.size << u.size
    if mode == "exhaustive":
        if u.size > max_size:
            raise ValueError(
                f"exhaustive enumeration over {u.size} elements yields 2**{width} values; "
                f"limit is {max_size} elements"
            )
        for value in range(1 << width):
            yield Multirelation(u, value)
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(count):
            yield Multirelation(u, rng.getrandbits(width) if width else 0)
    else:
        raise ValueError(f"unknown generator mode {mode!r}")


def _domain(n: int, var: str) -> range | list[int]:
    if var in SUBID_VARS:
        return [bits.lift_set(n, mask) for mask in range(1 << n)]
    return range(1 << (n << n))


def space_size(law: Law, n: int) -> int:
    size = 1
    for var in law.variables:
        size *= (1 << n) if var in SUBID_VARS else 1 << (n << n)
    return size


def exhaustive_envs(law: Law, n: int) -> Iterator[dict[str, int]]:
    names = law.variables
    for values in itertools.product(*(_domain(n, v) for v in names)):
        yield dict(zip(names, values))


def random_env(law: Law, n: int, rng: random.Random) -> dict[str, int]:
    env = {}
    for var in law.variables:
        if var in SUBID_VARS:
            env[var] = bits.lift_set(n, rng.getrandbits(n))
        else:
            env[var] = rng.getrandbits(n << n)
    if law.bias is not None and rng.random() < 0.5:
        law.bias(env, rng, n)
    return env


# biases --------------------------------------------------------------------

def _noise(rng: random.Random, n: int) -> int:
    return rng.getrandbits(n << n)


def _subnoise(rng: random.Random, n: int) -> int:
    return bits.lift_set(n, rng.getrandbits(n))


def _dia(n, x, p):
    return bits.dom(n, bits.seq(n, x, bits.dom(n, p)))


def _box(n, x, p):
    return bits.anti(n, bits.seq(n, x, bits.anti(n, p)))


def bias_above(var: str, base: str) -> Bias:
    """Make ``base <= var`` true."""
    def bias(env, rng, n):
        env[var] = env[base] | _noise(rng, n)
    return bias


def bias_set(var: str, value: Callable[[dict, random.Random, int], int]) -> Bias:
    def bias(env, rng, n):
        env[var] = value(env, rng, n)
    return bias


def _induction_target(seed_of: Callable[[dict, int], int], x: str = "x") -> Callable:
    """A value ``y`` with ``s + x.y <= y``: the least fixpoint over ``s`` plus noise."""
    def value(env, rng, n):
        return bits.bstar(n, env[x], seed_of(env, n) | _noise(rng, n))
    return value


def _simulation_bias(env, rng, n):
    # x := p.y + n'.a(p) with n' free of empty outputs, so x.p <= p.y
    p, y = env["p"], env["y"]
    noise = _noise(rng, n) & ~bits.one_par(n)
    env["x"] = bits.seq(n, p, y) | bits.seq(n, noise, bits.anti(n, p))


# custom predicates -------------------------------------------------------------

def _output_restriction(n, env):
    x, p = env["x"], env["p"]
    inside = bits.lower(n, p)
    direct = 0
    for a, subset in bits.pairs(n, x):
        if subset & ~inside == 0:
            direct |= bits.pair_bit(n, a, subset)
    lhs = bits.seq(n, x, p)
    return lhs == direct, lhs, direct, None


def _input_restriction(n, env):
    x, p = env["x"], env["p"]
    inside = bits.lower(n, p)
    direct = 0
    for a, subset in bits.pairs(n, x):
        if inside >> a & 1:
            direct |= bits.pair_bit(n, a, subset)
    lhs = bits.seq(n, p, x)
    return lhs == direct, lhs, direct, None


def _anti_as_complement(n, env):
    x = env["x"]
    lhs = bits.anti(n, x)
    rhs = bits.one_seq(n) & ~bits.dom(n, x)
    return lhs == rhs, lhs, rhs, None


def _dia_direct(n, env):
    lhs = bits.dom(n, bits.seq(n, env["x"], env["p"]))
    rhs = bits.diamond_direct(n, env["x"], env["p"])
    return lhs == rhs, lhs, rhs, None


def _box_direct(n, env):
    lhs = bits.anti(n, bits.seq(n, env["x"], bits.one_seq(n) ^ env["p"]))
    rhs = bits.box_direct(n, env["x"], env["p"])
    return lhs == rhs, lhs, rhs, None


def _finite_iteration(n, env):
    """The chain R^(0), R^(1), ... ascends, settles, and its limit is the star."""
    x = env["x"]
    unit = bits.one_seq(n)
    prev, cur = 0, unit
    ok = True
    for _ in range(bits.max_steps_default(n)):
        if prev & ~cur:
            ok = False
            break
        if cur == prev:
            break
        prev, cur = cur, unit | bits.seq(n, x, cur)
    star = bits.star(n, x)
    fixed = (unit | bits.seq(n, x, star)) == star
    return ok and fixed and cur == star, cur, star, None


def _subid_boolean(n, env):
    """Subidentities: meet is both compositions, complement is antidomain."""
    p, q = env["p"], env["q"]
    meet = bits.seq(n, p, q)
    ok = (
        meet == bits.par(n, p, q) == (p & q)
        and (p | bits.anti(n, p)) == bits.one_seq(n)
        and bits.seq(n, p, bits.anti(n, p)) == 0
    )
    return ok, meet, p & q, None


# the registry ------------------------------------------------------------------

def _registry() -> list[Law]:
    L = make_law
    laws: list[Law] = []
    add = laws.append

    # proto-trioid axioms
    add(L("proto.plus_assoc", "x + (y + z) = (x + y) + z"))
    add(L("proto.plus_comm", "x + y = y + x"))
    add(L("proto.plus_zero", "x + 0 = x"))
    add(L("proto.plus_idem", "x + x = x"))
    add(L("proto.seq_left_unit", "1s ; x = x"))
    add(L("proto.seq_right_unit", "x ; 1s = x"))
    add(L("proto.left_subdistr", "x;y + x;z <= x;(y + z)"))
    add(L("proto.right_distr", "(x + y);z = x;z + y;z"))
    add(L("proto.seq_left_zero", "0 ; x = 0"))
    add(L("proto.par_assoc", "x || (y || z) = (x || y) || z"))
    add(L("proto.par_comm", "x || y = y || x"))
    add(L("proto.par_unit", "1p || x = x"))
    add(L("proto.par_left_distr", "x || (y + z) = x || y + x || z",
          paper_discrepancy="axiom list prints the right-hand side as x·y+x·z; "
                            "that reading is refuted, see neg.par_distr_misprint"))
    add(L("proto.par_zero", "0 || x = 0"))

    # dp-trioid axioms and the dp star pair
    add(L("dp.assoc_left", "d(x);(y;z) = (d(x);y);z"))
    add(L("dp.assoc_mid", "x;(d(y);z) = (x;d(y));z"))
    add(L("dp.assoc_right", "x;(y;d(z)) = (x;y);d(z)"))
    add(L("dp.left_preservation", "x <= d(x);x"))
    add(L("dp.locality", "d(x;y) = d(x;d(y))"))
    add(L("dp.additivity", "d(x + y) = d(x) + d(y)"))
    add(L("dp.subidentity", "d(x) <= 1s"))
    add(L("dp.strictness", "d(0) = 0"))
    add(L("dp.interaction", "(x || y);d(z) = (x;d(z)) || (y;d(z))"))
    add(L("dp.par_domain", "d(x || y) = d(x);d(y)"))
    add(L("dp.par_meet", "d(x) || d(y) = d(x);d(y)"))
    add(L("dp.star.unfold", "1s + x;x^* <= x^*", group="dp.star"))
    add(L("dp.star.induction", "d(z) + x;y <= y => x^*;d(z) <= y", group="dp.star",
          bias=bias_set("y", _induction_target(lambda e, n: bits.dom(n, e["z"])))))

    # ap-trioid axioms and the ap star pair
    add(L("ap.assoc_left", "a(x);(y;z) = (a(x);y);z"))
    add(L("ap.assoc_mid", "x;(a(y);z) = (x;a(y));z"))
    add(L("ap.assoc_right", "x;(y;a(z)) = (x;y);a(z)"))
    add(L("ap.left_annihilation", "a(x);x = 0"))
    add(L("ap.locality", "a(x;y) = a(x;a(a(y)))"))
    add(L("ap.complementation", "a(x) + a(a(x)) = 1s"))
    add(L("ap.left_distr", "a(x);(y + z) = a(x);y + a(x);z"))
    add(L("ap.interaction", "(x || y);a(z) = (x;a(z)) || (y;a(z))"))
    add(L("ap.par_antidomain", "a(x || y) = a(x) + a(y)"))
    add(L("ap.par_meet", "a(x) || a(y) = a(x);a(y)"))
    add(L("ap.star.unfold", "1s + x;x^* <= x^*", group="ap.star"))
    add(L("ap.star.induction", "a(z) + x;y <= y => x^*;a(z) <= y", group="ap.star",
          bias=bias_set("y", _induction_target(lambda e, n: bits.anti(n, e["z"])))))
    add(L("ap.domain_def", "a(a(x)) = d(x)"))

    # basic laws of sequential and parallel composition
    add(L("seq.weak_assoc", "(x;y);z <= x;(y;z)"))
    add(L("seq.left_isotone", "x <= y => z;x <= z;y", bias=bias_above("y", "x")))
    add(L("seq.right_isotone", "x <= y => x;z <= y;z", bias=bias_above("y", "x")))
    add(L("par.left_isotone", "x <= y => z || x <= z || y", bias=bias_above("y", "x")))
    add(L("par.interaction", "(x || y);z <= (x;z) || (y;z)"))

    # subidentities
    add(L("subid.output_restriction", "x;p = {(a,A) in x | lift(A) <= p}", custom=_output_restriction,
          custom_vars=("p", "x"), anchor_text="(a,A) ∈ x·p ⇔ (a,A) ∈ x ∧ ι(A) ≤ p"))
    add(L("subid.input_restriction", "p;x = {(a,A) in x | (a,{a}) in p}", custom=_input_restriction,
          custom_vars=("p", "x"), anchor_text="(a,A) ∈ p·x ⇔ ι(a) ∈ p ∧ (a,A) ∈ x"))
    add(L("subid.assoc_left", "p;(y;z) = (p;y);z"))
    add(L("subid.assoc_mid", "x;(p;z) = (x;p);z"))
    add(L("subid.assoc_right", "x;(y;p) = (x;y);p"))
    add(L("subid.interaction", "(x || y);p = (x;p) || (y;p)"))
    add(L("subid.left_distr", "p;(y + z) = p;y + p;z"))
    add(L("subid.boolean", "p;q = p || q = p & q, p + a(p) = 1s, p;a(p) = 0", custom=_subid_boolean,
          custom_vars=("p", "q"), anchor_text="p·q = p‖q = p∩q, p+a(p) = 1σ, p·a(p) = 0"))
    add(L("subid.meet_comm", "p;q = q;p"))
    add(L("subid.distributive", "p + q;r = (p + q);(p + r)"))

    # domain laws of the concrete model
    add(L("dom.subidentity", "d(x) <= 1s"))
    add(L("dom.left_preservation", "d(x);x = x"))
    add(L("dom.additivity", "d(x + y) = d(x) + d(y)"))
    add(L("dom.strictness", "d(0) = 0"))
    add(L("dom.locality", "d(x;y) = d(x;d(y))"))
    add(L("dom.par", "d(x || y) = d(x);d(y)"))
    add(L("dom.par_meet", "d(x) || d(y) = d(x);d(y)"))

    # antidomain laws of the concrete model
    add(L("anti.complement", "a(x) = 1s - d(x)", custom=_anti_as_complement,
          custom_vars=("x",), anchor_text="a(x) = 1σ ∩ −d(x)"))
    add(L("anti.double", "d(x) = a(a(x))"))
    add(L("anti.dom_of_anti", "d(a(x)) = a(x)"))
    add(L("anti.left_annihilation", "a(x);x = 0"))
    add(L("anti.locality", "a(x;y) = a(x;d(y))"))
    add(L("anti.complementation", "a(x) + d(x) = 1s"))
    add(L("anti.sum", "a(x + y) = a(x);a(y)"))
    add(L("anti.par", "a(x || y) = a(x) + a(y)"))
    add(L("anti.par_meet", "a(x) || a(y) = a(x);a(y)"))

    # stronger laws for domain and antidomain elements
    add(L("domassoc.dom_left", "d(x);(y;z) = (d(x);y);z"))
    add(L("domassoc.anti_right", "x;(y;a(z)) = (x;y);a(z)"))
    add(L("domassoc.interaction_dom", "(x || y);d(z) = (x;d(z)) || (y;d(z))"))
    add(L("domassoc.interaction_anti", "(x || y);a(z) = (x;a(z)) || (y;a(z))"))
    add(L("domassoc.left_distr_dom", "d(x);(y + z) = d(x);y + d(x);z"))
    add(L("domassoc.left_distr_anti", "a(x);(y + z) = a(x);y + a(x);z"))

    # laws derivable in dp-dioids
    add(L("dpdioid.retraction", "d(d(x)) = d(x)"))
    add(L("dpdioid.isotone", "x <= y => d(x) <= d(y)", bias=bias_above("y", "x")))
    add(L("dpdioid.left_preservation", "d(x);x = x"))
    add(L("dpdioid.seq_bound", "d(x;y) <= d(x)"))
    add(L("dpdioid.subid_below_dom", "x <= 1s => x <= d(x)",
          bias=bias_set("x", lambda e, rng, n: e["x"] & bits.one_seq(n))))
    add(L("dpdioid.export", "d(d(x);y) = d(x);d(y)"))
    add(L("dpdioid.least_left_preservation", "x <= d(y);x <=> d(x) <= d(y)",
          bias=bias_above("y", "x")))
    add(L("dpdioid.right_zero", "d(x);0 = 0"))
    add(L("dpdioid.zero_iff", "d(x) = 0 <=> x = 0", bias=bias_set("x", lambda e, rng, n: 0)))
    add(L("dpdioid.sum_isotone", "d(x) <= d(x + y)"))
    add(L("dpdioid.meet_comm", "d(x);d(y) = d(y);d(x)"))
    add(L("dpdioid.meet_idem", "d(x);d(x) = d(x)"))
    add(L("dpdioid.lattice_distr", "d(x) + d(y);d(z) = (d(x) + d(y));(d(x) + d(z))"))

    # laws derivable in dp-trioids
    add(L("dptrioid.par_unit_domain", "d(1p) = 1s"))
    add(L("dptrioid.par_domain", "d(x || y) = d(x) || d(y)"))
    add(L("dptrioid.par_closed", "d(d(x) || d(y)) = d(x) || d(y)"))
    add(L("dptrioid.par_idem", "d(x) || d(x) = d(x)"))

    # laws derivable in ap-dioids
    add(L("apdioid.subidentity", "a(x) <= 1s"))
    add(L("apdioid.idem", "a(x);a(x) = a(x)"))
    add(L("apdioid.one_iff", "a(x) = 1s <=> x = 0", bias=bias_set("x", lambda e, rng, n: 0)))
    add(L("apdioid.greatest_annihilator", "a(x);y = 0 <=> a(x) <= a(y)",
          bias=bias_set("y", lambda e, rng, n: bits.seq(n, bits.dom(n, e["x"]), _noise(rng, n)))))
    add(L("apdioid.antitone", "x <= y => a(y) <= a(x)", bias=bias_above("y", "x")))
    add(L("apdioid.sum_annihilation", "a(x);a(y);d(x + y) = 0"))
    add(L("apdioid.multiplicative", "a(x + y) = a(x);a(y)"))
    add(L("apdioid.export", "a(a(x);y) = d(x) + a(y)"))

    # modal operators
    add(L("modal.dia_def", "<x> y = d(x;y)"))
    add(L("modal.box_def", "[x] y = a(x;a(y))"))
    add(L("modal.box_locality", "[x] d(y) = [x] y"))
    add(L("modal.dia_subid", "<x> p = d(x;p)"))
    add(L("modal.box_dia_dual", "[x] p = a(<x> a(p))"))
    add(L("modal.dia_box_dual", "<x> p = a([x] a(p))"))
    add(L("modal.dia_direct", "<x>p = {(a,{a}) | some (a,B) in x, B <= p}", custom=_dia_direct,
          custom_vars=("p", "x"), anchor_text="⟨x⟩p = {ι(a) | ∃B. (a,B) ∈ x ∧ ι(B) ⊆ p}"))
    add(L("modal.box_direct", "[x]p = {(a,{a}) | every (a,B) in x meets p}", custom=_box_direct,
          custom_vars=("p", "x"), anchor_text="[x]p = {ι(a) | ∀B. (a,B) ∈ x ⇒ ι(B) ∩ p ≠ ∅}"))
    add(L("modal.demodalisation", "<x>p <= q <=> x;p <= q;x",
          bias=bias_set("q", lambda e, rng, n: _dia(n, e["x"], e["p"]) | _subnoise(rng, n))))
    add(L("modal.dia_zero", "<0> p = 0"))
    add(L("modal.dia_one", "<1s> p = d(p)"))
    add(L("modal.dia_par_unit", "<1p> p = 1s"))

    # diamond axioms of star-free CDL
    add(L("cdl.dia_plus", "<x + y> p = <x> p + <y> p"))
    add(L("cdl.dia_seq", "<x;y> p = <x> <y> p"))
    add(L("cdl.dia_test", "<d(p)> q = d(p);d(q)"))
    add(L("cdl.dia_par", "<x || y> p = <x> p ; <y> p"))

    # box axioms of star-free CDL
    add(L("cdl.box_plus", "[x + y] p = [x] p ; [y] p"))
    add(L("cdl.box_seq", "[x;y] p = [x] [y] p"))
    add(L("cdl.box_test", "[d(p)] q = a(p) + d(q)"))
    add(L("cdl.box_par", "[x || y] p = [x] p + [y] p",
          paper_discrepancy="printed as [x]p·[y]p, which is refuted (neg.box_par_mult); "
                            "the De Morgan dual of the diamond law gives the sum"))

    # star laws
    add(L("star.unfold", "1s + x;x^* = x^*"))
    add(L("star.induction", "p + x;y <= y => x^*;p <= y",
          bias=bias_set("y", _induction_target(lambda e, n: e["p"]))))
    add(L("star.bstar_unfold", "y + x;bstar(x, y) = bstar(x, y)"))
    add(L("star.bstar_induction", "y + x;z <= z => bstar(x, y) <= z",
          bias=bias_set("z", lambda e, rng, n: bits.bstar(n, e["x"], e["y"] | _noise(rng, n)))))
    add(L("star.bstar_unit", "bstar(x, 1s) = x^*"))
    add(L("star.fusion", "x^*;y <= bstar(x, y)"))
    add(L("star.fusion_right", "bstar(x, y);z <= bstar(x, y;z)"))
    add(L("star.subid_fusion", "bstar(x, p) = x^*;p"))
    add(L("star.simulation", "x;p <= p;y => x^*;p <= p;y^*", bias=_simulation_bias))
    add(L("star.finite_iteration", "x^* = union of x^(n)", custom=_finite_iteration,
          custom_vars=("x",), anchor_text="x* = ⋃ₙ x⁽ⁿ⁾, x⁽ⁿ⁺¹⁾ = 1σ+x·x⁽ⁿ⁾"))
    add(L("star.dia_unfold", "p + <x> <x^*> p = <x^*> p"))
    add(L("star.dia_induction", "<x> p <= p => <x^*> p <= p",
          bias=bias_set("p", lambda e, rng, n: _dia(n, bits.star(n, e["x"]), _subnoise(rng, n)))))
    add(L("star.dia_right_unfold", "p + <x^*> <x> p <= <x^*> p"))
    add(L("star.dia_induction_var", "p + <x> q <= q => <x^*> p <= q",
          bias=bias_set("q", lambda e, rng, n: _dia(n, bits.star(n, e["x"]), e["p"] | e["q"]))))
    add(L("star.segerberg_converse", "p + <x^*> (<x> p ; a(p)) <= <x^*> p"))
    add(L("star.box_unfold", "p ; [x] [x^*] p = [x^*] p",
          paper_discrepancy="printed with 1σ in place of the leading p; that reading is "
                            "refuted, see neg.box_star_unfold_misprint"))
    add(L("star.box_induction", "p <= [x] p => p <= [x^*] p",
          bias=bias_set("p", lambda e, rng, n: _box(n, bits.star(n, e["x"]), _subnoise(rng, n)))))

    # laws that fail in the multirelational model
    neg = {"polarity": REFUTABLE}
    add(L("neg.seq_assoc", "x;(y;z) <= (x;y);z", **neg))
    add(L("neg.left_distr", "x;(y + z) <= x;y + x;z", **neg))
    add(L("neg.right_annihilation", "x;0 = 0", **neg))
    add(L("neg.interaction_converse", "(x;z) || (y;z) <= (x || y);z", **neg))
    add(L("neg.dia_additive", "<x> (p + q) = <x> p + <x> q", **neg))
    add(L("neg.dia_strict", "<x> 0 = 0", **neg))
    add(L("neg.box_mult", "[x] (p;q) = [x] p ; [x] q", **neg))
    add(L("neg.box_costrict", "[x] 1s = 1s", **neg))
    add(L("neg.conjugation", "<x> p ; q = 0 <=> p ; [x] q = 0", **neg))
    add(L("neg.bstar_fusion", "bstar(x, y) = x^*;y", **neg))
    add(L("neg.segerberg", "<x^*> p <= p + <x^*> (<x> p ; a(p))", **neg))
    add(L("neg.segerberg_box", "p ; [x^*] (a(p) + [x] p) <= [x^*] p", **neg))
    add(L("neg.box_par_mult", "[x || y] p = [x] p ; [y] p", **neg,
          paper_discrepancy="this is the printed form of the box law for parallel composition"))
    add(L("neg.par_distr_misprint", "x || (y + z) = x;y + x;z", **neg,
          paper_discrepancy="printed form of the parallel distributivity axiom"))
    add(L("neg.dia_star_unfold_misprint", "1s + <x> <x^*> p = <x^*> p", **neg,
          paper_discrepancy="printed form of the antidomain diamond unfold law"))
    add(L("neg.box_star_unfold_misprint", "1s ; [x] [x^*] p = [x^*] p", **neg,
          paper_discrepancy="printed form of the box unfold law"))
    return laws


LAWS: tuple[Law, ...] = tuple(_registry())
_BY_ID = {law.id: law for law in LAWS}
if len(_BY_ID) != len(LAWS):
    raise RuntimeError("duplicate law ids in registry")


def list_laws() -> list[Law]:
    return list(LAWS)


def get_law(law_id: str) -> Law:
    try:
        return _BY_ID[law_id]
    except KeyError:
        raise KeyError(f"no law with id {law_id!r}") from None


AXIOM_GROUPS = {
    "proto": [law for law in LAWS if law.group == "proto"],
    "dp": [law for law in LAWS if law.group == "dp"],
    "ap": [law for law in LAWS if law.group == "ap" and law.id != "ap.domain_def"],
    "dp.star": [law for law in LAWS if law.group == "dp.star"],
    "ap.star": [law for law in LAWS if law.group == "ap.star"],
}
