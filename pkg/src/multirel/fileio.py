"""Line-oriented text format for universes and named multirelations.

::

    # comment
    universe a b c
    rel R
    a -> {b, c}
    b -> {}
    end

Saving always writes the canonical form: relations in name order, pairs
sorted by element index then subset bits, sets in universe order.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Multirelation, Universe, format_subset
from .errors import MrelParseError
from .terms import Environment

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_PAIR = re.compile(r"\s*([^\s{}>,-]+)\s*->\s*\{([^{}]*)\}\s*")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_set(u: Universe, body: str, line: int | None) -> int:
    mask = 0
    for raw in body.split(","):
        name = raw.strip()
        if not name:
            if body.strip():
                raise MrelParseError(f"empty element name in {{{body}}}", line)
            continue
        if name not in u.elements:
            raise MrelParseError(f"unknown element {name!r}", line)
        mask |= 1 << u.index(name)
    return mask


def _parse_pair(u: Universe, text: str, line: int | None) -> tuple[str, int]:
    m = _PAIR.fullmatch(text)
    if m is None:
        raise MrelParseError(f"expected '<elem> -> {{...}}', got {text.strip()!r}", line)
    elem, body = m.groups()
    if elem not in u.elements:
        raise MrelParseError(f"unknown element {elem!r}", line)
    return elem, _parse_set(u, body, line)


def parse_relation(u: Universe, text: str) -> Multirelation:
    """Parse an inline literal such as ``{ a -> {b}, b -> {} }`` (outer braces optional).

    This is the grammar :func:`str` produces for a multirelation, so printed
    values read back unchanged.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}") and _outer_braced(body):
        body = body[1:-1].strip()
    pairs = []
    for chunk in _split_pairs(body):
        elem, mask = _parse_pair(u, chunk, None)
        pairs.append((elem, u.names(mask)))
    return Multirelation.from_pairs(u, pairs)


def _outer_braced(body: str) -> bool:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0 and i != len(body) - 1:
                return False
    return True


def _split_pairs(body: str) -> list[str]:
    chunks, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch in ",;" and depth == 0:
            chunks.append(body[start:i])
            start = i + 1
    chunks.append(body[start:])
    return [c for c in chunks if c.strip()]


def loads_env(text: str) -> Environment:
    universe: Universe | None = None
    bindings: dict[str, Multirelation] = {}
    current: str | None = None
    current_start = 0
    pairs: list[tuple[str, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "universe":
            if universe is not None:
                raise MrelParseError("second universe line", lineno)
            names = rest.split()
            for name in names:
                if not _IDENT.match(name):
                    raise MrelParseError(f"bad element name {name!r}", lineno)
            try:
                universe = Universe(names)
            except ValueError as exc:
                raise MrelParseError(str(exc), lineno) from None
            continue
        if universe is None:
            raise MrelParseError("expected a 'universe' line first", lineno)
        if head == "rel":
            if current is not None:
                raise MrelParseError(f"'rel' inside unterminated block {current!r}", lineno)
            name = rest.strip()
            if not _IDENT.match(name):
                raise MrelParseError(f"bad relation name {name!r}", lineno)
            if name in bindings:
                raise MrelParseError(f"duplicate relation name {name!r}", lineno)
            current, current_start, pairs = name, lineno, []
            continue
        if head == "end" and not rest:
            if current is None:
                raise MrelParseError("'end' without 'rel'", lineno)
            bindings[current] = Multirelation.from_pairs(universe, pairs)
            current = None
            continue
        if current is None:
            raise MrelParseError(f"unexpected line {line!r}", lineno)
        elem, mask = _parse_pair(universe, line, lineno)
        pairs.append((elem, universe.names(mask)))
    if current is not None:
        raise MrelParseError(f"relation {current!r} is missing 'end'", current_start)
    if universe is None:
        raise MrelParseError("no 'universe' line", None)
    return Environment(universe, bindings)


def dumps_env(env: Environment) -> str:
    u = env.universe
    out = ["universe " + " ".join(u.elements)]
    for name in sorted(env.bindings):
        out.append(f"rel {name}")
        for a, subset in env.bindings[name].index_pairs():
            out.append(f"{u.elements[a]} -> {format_subset(u, subset)}")
        out.append("end")
    return "\n".join(out) + "\n"


def load_env(path: str | Path) -> Environment:
    return loads_env(Path(path).read_text())


def save_env(env: Environment, path: str | Path) -> None:
    Path(path).write_text(dumps_env(env))
