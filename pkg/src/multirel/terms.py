"""Concrete syntax, pretty printer and evaluator for concurrent dynamic algebra terms.

Grammar (ASCII)::

    t ::= 0 | 1s | 1p | U | ident | d(t) | a(t) | bstar(t, t)
        | t + t | t ; t | t || t | t^* | <t> t | [t] t | (t)

Binding, tightest first: postfix ``^*``; prefix ``d(..)``, ``a(..)``,
``<t>``, ``[t]``; then ``;``; then ``||``; then ``+``.  Binary operators
associate to the left.

Evaluation is generic over a *model*: any object offering the operations
named in :class:`Model`.  :class:`RelModel` interprets terms over packed
multirelations; :mod:`multirel.algebra` supplies a model for operation
tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Protocol, Union

from . import bits
from .core import Multirelation, Universe
from .errors import TermSyntaxError, UnboundVariable, UniverseMismatch

RESERVED = frozenset({"0", "1s", "1p", "U"})


# abstract syntax -------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class UnitSeq:
    pass


@dataclass(frozen=True)
class UnitPar:
    pass


@dataclass(frozen=True)
class Univ:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Plus:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Seq:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Par:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Dom:
    arg: "Term"


@dataclass(frozen=True)
class Anti:
    arg: "Term"


@dataclass(frozen=True)
class Star:
    arg: "Term"


@dataclass(frozen=True)
class BStar:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Dia:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Box:
    left: "Term"
    right: "Term"


Term = Union[Zero, UnitSeq, UnitPar, Univ, Var, Plus, Seq, Par, Dom, Anti, Star, BStar, Dia, Box]


def variables(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    out: set[str] = set()
    for child in _children(t):
        out |= variables(child)
    return out


def _children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, (Plus, Seq, Par, BStar, Dia, Box)):
        return (t.left, t.right)
    if isinstance(t, (Dom, Anti, Star)):
        return (t.arg,)
    return ()


def operators(t: Term) -> set[type]:
    """Node types occurring in ``t`` (used to stage table searches)."""
    out = {type(t)}
    for child in _children(t):
        out |= operators(child)
    return out


# lexer -----------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>1s|1p|0|\d+\w*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\|\||\^\*|[+;<>\[\](),]))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise TermSyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        word = m.group(kind)
        if kind == "num" and word not in RESERVED:
            raise TermSyntaxError(f"unknown constant {word!r}", start)
        toks.append(_Tok(kind, word, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


# parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, text: str) -> _Tok:
        tok = self.cur
        if tok.text != text or tok.kind == "end":
            shown = tok.text or "end of input"
            raise TermSyntaxError(f"expected {text!r}, found {shown!r}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Term:
        t = self.plus()
        if self.cur.kind != "end":
            raise TermSyntaxError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return t

    def plus(self) -> Term:
        t = self.par()
        while self.cur.text == "+":
            self.i += 1
            t = Plus(t, self.par())
        return t

    def par(self) -> Term:
        t = self.seq()
        while self.cur.text == "||":
            self.i += 1
            t = Par(t, self.seq())
        return t

    def seq(self) -> Term:
        t = self.prefix()
        while self.cur.text == ";":
            self.i += 1
            t = Seq(t, self.prefix())
        return t

    def prefix(self) -> Term:
        tok = self.cur
        if tok.text == "<":
            self.i += 1
            inner = self.plus()
            self.take(">")
            return Dia(inner, self.prefix())
        if tok.text == "[":
            self.i += 1
            inner = self.plus()
            self.take("]")
            return Box(inner, self.prefix())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.cur.text == "^*":
            self.i += 1
            t = Star(t)
        return t

    def atom(self) -> Term:
        tok = self.cur
        if tok.kind == "num" or tok.text == "U":
            self.i += 1
            return {"0": Zero(), "1s": UnitSeq(), "1p": UnitPar(), "U": Univ()}[tok.text]
        if tok.kind == "ident":
            if tok.text in ("d", "a", "bstar") and self.peek().text == "(":
                self.i += 2
                first = self.plus()
                if tok.text == "bstar":
                    self.take(",")
                    second = self.plus()
                    self.take(")")
                    return BStar(first, second)
                self.take(")")
                return Dom(first) if tok.text == "d" else Anti(first)
            self.i += 1
            return Var(tok.text)
        if tok.text == "(":
            self.i += 1
            t = self.plus()
            self.take(")")
            return t
        shown = tok.text or "end of input"
        raise TermSyntaxError(f"expected a term, found {shown!r}", tok.pos)


def parse_term(text: str) -> Term:
    """Parse the ASCII term syntax; raises :class:`TermSyntaxError` with a position."""
    return _Parser(text).parse()


# printer ---------------------------------------------------------------------

_LEVEL = {Plus: 1, Par: 2, Seq: 3, Dia: 4, Box: 4, Star: 5}


def _level(t: Term) -> int:
    return _LEVEL.get(type(t), 6)


def format_term(t: Term, floor: int = 0) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""
    text = _format(t)
    return f"({text})" if _level(t) < floor else text


def _format(t: Term) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, UnitSeq):
        return "1s"
    if isinstance(t, UnitPar):
        return "1p"
    if isinstance(t, Univ):
        return "U"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Plus):
        return f"{format_term(t.left, 1)} + {format_term(t.right, 2)}"
    if isinstance(t, Par):
        return f"{format_term(t.left, 2)} || {format_term(t.right, 3)}"
    if isinstance(t, Seq):
        return f"{format_term(t.left, 3)} ; {format_term(t.right, 4)}"
    if isinstance(t, Dia):
        return f"<{format_term(t.left)}> {format_term(t.right, 4)}"
    if isinstance(t, Box):
        return f"[{format_term(t.left)}] {format_term(t.right, 4)}"
    if isinstance(t, Star):
        return f"{format_term(t.arg, 5)}^*"
    if isinstance(t, Dom):
        return f"d({format_term(t.arg)})"
    if isinstance(t, Anti):
        return f"a({format_term(t.arg)})"
    if isinstance(t, BStar):
        return f"bstar({format_term(t.left)}, {format_term(t.right)})"
    raise TypeError(f"not a term: {t!r}")


# models and evaluation -------------------------------------------------------

class Model(Protocol):
    def zero(self) -> Any: ...
    def one_seq(self) -> Any: ...
    def one_par(self) -> Any: ...
    def univ(self) -> Any: ...
    def plus(self, x: Any, y: Any) -> Any: ...
    def seq(self, x: Any, y: Any) -> Any: ...
    def par(self, x: Any, y: Any) -> Any: ...
    def dom(self, x: Any) -> Any: ...
    def anti(self, x: Any) -> Any: ...
    def star(self, x: Any) -> Any: ...
    def bstar(self, x: Any, y: Any) -> Any: ...
    def le(self, x: Any, y: Any) -> bool: ...


class RelModel:
    """Packed multirelations over ``n`` elements, values are plain ints."""

    def __init__(self, n: int):
        self.n = n

    def zero(self):
        return 0

    def one_seq(self):
        return bits.one_seq(self.n)

    def one_par(self):
        return bits.one_par(self.n)

    def univ(self):
        return bits.universal(self.n)

    def plus(self, x, y):
        return x | y

    def seq(self, x, y):
        return bits.seq(self.n, x, y)

    def par(self, x, y):
        return bits.par(self.n, x, y)

    def dom(self, x):
        return bits.dom(self.n, x)

    def anti(self, x):
        return bits.anti(self.n, x)

    def star(self, x):
        return bits.star(self.n, x)

    def bstar(self, x, y):
        return bits.bstar(self.n, x, y)

    def le(self, x, y):
        return x & ~y == 0


Compiled = Callable[[Mapping[str, Any]], Any]


def compile_term(t: Term, model: Model) -> Compiled:
    """Turn ``t`` into a closure over ``model`` taking a variable binding.

    Diamond is ``d(x . d(y))`` and box is ``a(x . a(y))``; both agree with
    the subidentity forms because ``d`` and ``a`` are local.
    """
    if isinstance(t, Var):
        name = t.name

        def var(env):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(name) from None
        return var
    if isinstance(t, Zero):
        return lambda env: model.zero()
    if isinstance(t, UnitSeq):
        return lambda env: model.one_seq()
    if isinstance(t, UnitPar):
        return lambda env: model.one_par()
    if isinstance(t, Univ):
        return lambda env: model.univ()
    if isinstance(t, (Dom, Anti, Star)):
        f = compile_term(t.arg, model)
        op = {Dom: model.dom, Anti: model.anti, Star: model.star}[type(t)]
        return lambda env: op(f(env))
    f = compile_term(t.left, model)
    g = compile_term(t.right, model)
    if isinstance(t, Plus):
        return lambda env: model.plus(f(env), g(env))
    if isinstance(t, Seq):
        return lambda env: model.seq(f(env), g(env))
    if isinstance(t, Par):
        return lambda env: model.par(f(env), g(env))
    if isinstance(t, BStar):
        return lambda env: model.bstar(f(env), g(env))
    if isinstance(t, Dia):
        return lambda env: model.dom(model.seq(f(env), model.dom(g(env))))
    if isinstance(t, Box):
        return lambda env: model.anti(model.seq(f(env), model.anti(g(env))))
    raise TypeError(f"not a term: {t!r}")


@dataclass
class Environment:
    """Variable bindings to multirelations over one shared universe."""

    universe: Universe
    bindings: dict[str, Multirelation] = field(default_factory=dict)

    def __post_init__(self):
        for name, value in self.bindings.items():
            self._check(name, value)

    def _check(self, name: str, value: Multirelation) -> None:
        if value.universe != self.universe:
            raise UniverseMismatch(f"binding {name!r} lives over a different universe")

    def bind(self, name: str, value: Multirelation) -> None:
        self._check(name, value)
        self.bindings[name] = value

    def __getitem__(self, name: str) -> Multirelation:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundVariable(name) from None

    def raw(self) -> dict[str, int]:
        return {name: rel.bits for name, rel in self.bindings.items()}


def eval_term(t: Term | str, env: Environment) -> Multirelation:
    if isinstance(t, str):
        t = parse_term(t)
    env.universe.check_size()
    value = compile_term(t, RelModel(env.universe.size))(env.raw())
    return Multirelation(env.universe, value)
