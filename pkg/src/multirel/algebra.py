"""Finite algebras given by operation tables.

Axioms are taken from the law registry and evaluated over a
:class:`TableModel`, so a table algebra and the multirelational model are
checked against literally the same formulas.

Text format::

    name four-element chain
    carrier 0 a 1p 1s
    const zero 0
    const one_seq 1s
    const one_par 1p
    table plus
    0: 0 a 1p 1s
    ...
    end
    table dom
    0: 0
    ...
    end
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import bits
from .errors import MissingTable, MrelParseError
from .laws import AXIOM_GROUPS, Law, compile_formula, get_law
from .terms import Anti, BStar, Box, Dia, Dom, Par, Plus, Seq, Star, Univ, UnitPar, operators

BINARY = ("plus", "seq", "par")
UNARY = ("dom", "anti", "star")
CONSTANTS = ("zero", "one_seq", "one_par")


@dataclass
class FiniteAlgebra:
    carrier: tuple[str, ...]
    tables: dict[str, list]
    zero: int
    one_seq: int
    one_par: int
    name: str = ""
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        self.carrier = tuple(self.carrier)
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise ValueError("carrier elements must be distinct")
        for c in (self.zero, self.one_seq, self.one_par):
            if not 0 <= c < n:
                raise ValueError(f"constant index {c} outside the carrier")
        for op, table in self.tables.items():
            if op not in BINARY + UNARY:
                raise ValueError(f"unknown operation {op!r}")
            rows = table if op in BINARY else [table]
            if len(table) != n or any(len(r) != n for r in rows):
                raise ValueError(f"table {op!r} is not total over the carrier")
            if any(not 0 <= v < n for r in rows for v in r):
                raise ValueError(f"table {op!r} has entries outside the carrier")

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, name: str) -> int:
        return self.carrier.index(name)

    def op(self, name: str) -> list:
        try:
            return self.tables[name]
        except KeyError:
            raise MissingTable(f"algebra {self.name or '(unnamed)'} has no {name!r} table") from None

    def dom(self, x: int) -> int:
        if "dom" in self.tables:
            return self.tables["dom"][x]
        anti = self.op("anti")
        return anti[anti[x]]

    def le(self, x: int, y: int) -> bool:
        return self.tables["plus"][x][y] == y

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.carrier, self.tables, self.zero, self.one_seq, self.one_par) == \
            (other.carrier, other.tables, other.zero, other.one_seq, other.one_par)


class TableModel:
    """Adapter exposing a :class:`FiniteAlgebra` through the term-model interface."""

    def __init__(self, alg: FiniteAlgebra):
        self.alg = alg

    def zero(self):
        return self.alg.zero

    def one_seq(self):
        return self.alg.one_seq

    def one_par(self):
        return self.alg.one_par

    def univ(self):
        raise MissingTable("table algebras have no universal element")

    def plus(self, x, y):
        return self.alg.tables["plus"][x][y]

    def seq(self, x, y):
        return self.alg.tables["seq"][x][y]

    def par(self, x, y):
        return self.alg.op("par")[x][y]

    def dom(self, x):
        return self.alg.dom(x)

    def anti(self, x):
        return self.alg.op("anti")[x]

    def star(self, x):
        return self.alg.op("star")[x]

    def bstar(self, x, y):
        raise MissingTable("binary star is not tabulated")

    def le(self, x, y):
        return self.alg.le(x, y)


# axiom systems -------------------------------------------------------------

def _concurrent(law: Law) -> bool:
    ops: set[type] = set()
    for rel in _relations(law.formula):
        ops |= operators(rel.left) | operators(rel.right)
    return bool(ops & {Par, UnitPar})


def _relations(f):
    if hasattr(f, "premise"):
        return [f.premise, f.conclusion]
    if hasattr(f, "op"):
        return [f]
    return [f.left, f.right]


def _system_laws() -> dict[str, list[Law]]:
    proto = AXIOM_GROUPS["proto"]
    seq_only = [law for law in proto if not _concurrent(law)]
    dp, ap = AXIOM_GROUPS["dp"], AXIOM_GROUPS["ap"]
    dp_seq = [law for law in dp if not _concurrent(law)]
    ap_seq = [law for law in ap if not _concurrent(law)]
    return {
        "proto-dioid": seq_only,
        "proto-trioid": proto,
        "dp-dioid": seq_only + dp_seq,
        "dp-trioid": proto + dp,
        "ap-dioid": seq_only + ap_seq,
        "ap-trioid": proto + ap,
        "dp-bi-Kleene": proto + dp + AXIOM_GROUPS["dp.star"],
        "ap-bi-Kleene": proto + ap + AXIOM_GROUPS["ap.star"],
    }


SYSTEMS = _system_laws()


def required_tables(system: str) -> tuple[str, ...]:
    needed = ["plus", "seq"]
    if "trioid" in system or "Kleene" in system:
        needed.append("par")
    needed.append("anti" if system.startswith("ap") else "dom")
    if "Kleene" in system:
        needed.append("star")
    return tuple(needed)


def _system(name: str) -> list[Law]:
    try:
        return SYSTEMS[name]
    except KeyError:
        raise ValueError(f"unknown system {name!r}; choose from {', '.join(SYSTEMS)}") from None


@dataclass(frozen=True)
class AxiomResult:
    law_id: str
    anchor: str
    holds: bool
    counterexample: dict[str, str] | None = None


@dataclass
class TableVerdict:
    system: str
    algebra: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.holds]

    def to_text(self) -> str:
        lines = [f"# {self.algebra or '(unnamed)'} as {self.system}"]
        for r in self.results:
            line = f"{'ok' if r.holds else 'FAIL':4} {r.law_id:28} {r.anchor}"
            if r.counterexample:
                line += "   at " + ", ".join(f"{k}={v}" for k, v in r.counterexample.items())
            lines.append(line)
        lines.append(f"# {len(self.results) - len(self.failures())}/{len(self.results)} axioms hold: "
                     f"{'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _first_failure(law: Law, model: TableModel, n: int, compiled=None) -> dict[str, int] | None:
    check = compiled or compile_formula(law.formula, model)
    names = law.variables
    for values in itertools.product(range(n), repeat=len(names)):
        env = dict(zip(names, values))
        if not check(env)[0]:
            return env
    return None


def check_table_axioms(alg: FiniteAlgebra, system: str) -> TableVerdict:
    """Quantify every axiom of ``system`` exhaustively over the carrier."""
    laws = _system(system)
    for op in required_tables(system):
        alg.op(op)
    model = TableModel(alg)
    verdict = TableVerdict(system, alg.name)
    for law in laws:
        env = _first_failure(law, model, alg.size)
        cex = None if env is None else {k: alg.carrier[v] for k, v in env.items()}
        verdict.results.append(AxiomResult(law.id, law.anchor, env is None, cex))
    return verdict


# properties -----------------------------------------------------------------

def complements(alg: FiniteAlgebra, x: int) -> list[int]:
    """All y with x+y = 1σ and x·y = y·x = 0."""
    plus, seq = alg.tables["plus"], alg.tables["seq"]
    return [y for y in range(alg.size)
            if plus[x][y] == alg.one_seq and seq[x][y] == alg.zero and seq[y][x] == alg.zero]


def complemented(alg: FiniteAlgebra) -> list[int]:
    return [x for x in range(alg.size) if complements(alg, x)]


def domain_elements(alg: FiniteAlgebra) -> list[int]:
    return sorted({alg.dom(x) for x in range(alg.size)})


def diamond(alg: FiniteAlgebra, x: int, y: int) -> int:
    return alg.dom(alg.tables["seq"][x][y])


def has_noncomplemented_domain_element(alg: FiniteAlgebra) -> bool:
    return set(complemented(alg)) != set(domain_elements(alg))


# built-in models --------------------------------------------------------------

def _tables(carrier, rows: dict[str, dict[str, str | list[str]]]) -> dict[str, list]:
    idx = {c: i for i, c in enumerate(carrier)}
    out = {}
    for op, table in rows.items():
        if op in BINARY:
            out[op] = [[idx[v] for v in table[c].split()] for c in carrier]
        else:
            out[op] = [idx[table[c]] for c in carrier]
    return out


def _chain_join(carrier) -> dict[str, str]:
    return {a: " ".join(carrier[max(i, j)] for j in range(len(carrier))) for i, a in enumerate(carrier)}


def four_element_chain() -> FiniteAlgebra:
    """dp-trioid on the chain 0 < a < 1p < 1s whose domain algebra is not boolean.

    The original ·-table repeats the row label 0 where row a is meant,
    and that row reads ``a a a a``; read literally, a·0 = a breaks the
    interaction axiom.  The original d-table repeats the label 1p where
    1s is meant, with value 1p.  Both rows are repaired here as
    ``a: 0 a a a`` and ``d(1s) = 1s``; :func:`four_element_chain_as_printed`
    keeps the literal reading.
    """
    c = ("0", "a", "1p", "1s")
    tables = _tables(c, {
        "plus": _chain_join(c),
        "seq": {"0": "0 0 0 0", "a": "0 a a a", "1p": "0 a 1p 1p", "1s": "0 a 1p 1s"},
        "par": {"0": "0 0 0 0", "a": "0 a a a", "1p": "0 a 1p 1s", "1s": "0 a 1s 1s"},
        "dom": {"0": "0", "a": "a", "1p": "1s", "1s": "1s"},
    })
    return FiniteAlgebra(c, tables, 0, 3, 2, name="four-element chain", notes=(
        "paper_discrepancy: printed seq-table row 2 is labelled 0 and reads a a a a; "
        "corrected to row a = 0 a a a",
        "paper_discrepancy: printed d-table row 4 is labelled 1p and reads 1p; "
        "corrected to d(1s) = 1s",
    ))


def four_element_chain_as_printed() -> FiniteAlgebra:
    """Positional reading of the original tables, kept to show it is not a dp-trioid."""
    alg = four_element_chain()
    tables = {k: [list(r) if isinstance(r, list) else r for r in v] for k, v in alg.tables.items()}
    a, p, s = 1, 2, 3
    tables["seq"][a] = [a, a, a, a]
    tables["dom"][s] = p
    return FiniteAlgebra(alg.carrier, tables, 0, s, p, name="four-element chain (as printed)")


def three_element_chain() -> FiniteAlgebra:
    """dp-trioid on 0 < 1s < 1p with ‖ as meet, where ⟨1p⟩0 = 0 < 1s."""
    c = ("0", "1s", "1p")
    tables = _tables(c, {
        "plus": _chain_join(c),
        "seq": {"0": "0 0 0", "1s": "0 1s 1p", "1p": "0 1p 1p"},
        "par": {"0": "0 0 0", "1s": "0 1s 1s", "1p": "0 1s 1p"},
        "dom": {"0": "0", "1s": "1s", "1p": "1s"},
    })
    return FiniteAlgebra(c, tables, 0, 1, 2, name="three-element chain")


def boolean_two() -> FiniteAlgebra:
    """{0, 1} with 1s = 1p = 1, both compositions meet, d the identity."""
    c = ("0", "1")
    meet = {"0": "0 0", "1": "0 1"}
    tables = _tables(c, {"plus": _chain_join(c), "seq": meet, "par": meet,
                         "dom": {"0": "0", "1": "1"}})
    return FiniteAlgebra(c, tables, 0, 1, 1, name="two-element boolean algebra")


def builtin_models() -> list[FiniteAlgebra]:
    return [four_element_chain(), three_element_chain()]


#: system each builtin model is claimed to satisfy
BUILTIN_CLAIMS = {"four-element chain": "dp-trioid", "three-element chain": "dp-trioid"}


def reify(n: int = 1) -> FiniteAlgebra:
    """The full algebra of multirelations over ``n`` elements as tables."""
    if n > 1:
        raise ValueError("reification is limited to one element (4 multirelations); "
                         "two elements would give 256 and cubic axiom checks")
    size = 1 << (n << n)
    carrier = tuple(f"r{v}" for v in range(size))
    vals = range(size)
    tables = {
        "plus": [[x | y for y in vals] for x in vals],
        "seq": [[bits.seq(n, x, y) for y in vals] for x in vals],
        "par": [[bits.par(n, x, y) for y in vals] for x in vals],
        "dom": [bits.dom(n, x) for x in vals],
        "anti": [bits.anti(n, x) for x in vals],
        "star": [bits.star(n, x) for x in vals],
    }
    return FiniteAlgebra(carrier, tables, 0, bits.one_seq(n), bits.one_par(n),
                         name=f"multirelations over {n} element")


# text format ---------------------------------------------------------------------

def dumps_algebra(alg: FiniteAlgebra) -> str:
    c = alg.carrier
    out = []
    if alg.name:
        out.append(f"name {alg.name}")
    out += [f"# {note}" for note in alg.notes]
    out.append("carrier " + " ".join(c))
    for const in CONSTANTS:
        out.append(f"const {const} {c[getattr(alg, const)]}")
    for op in BINARY + UNARY:
        if op not in alg.tables:
            continue
        out.append(f"table {op}")
        for i, row in enumerate(alg.tables[op]):
            cells = " ".join(c[v] for v in row) if op in BINARY else c[row]
            out.append(f"{c[i]}: {cells}")
        out.append("end")
    return "\n".join(out) + "\n"


def loads_algebra(text: str) -> FiniteAlgebra:
    name, carrier = "", None
    consts: dict[str, int] = {}
    tables: dict[str, list] = {}
    op = None
    rows: dict[int, object] = {}
    start = 0

    def ref(token: str, lineno: int) -> int:
        if token not in carrier:
            raise MrelParseError(f"unknown element {token!r}", lineno)
        return carrier.index(token)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if op is not None:
            if line == "end":
                if len(rows) != len(carrier):
                    missing = [carrier[i] for i in range(len(carrier)) if i not in rows]
                    raise MrelParseError(f"table {op} has no row for {', '.join(missing)}", lineno)
                tables[op] = [rows[i] for i in range(len(carrier))]
                op = None
                continue
            label, colon, cells = line.partition(":")
            if not colon:
                raise MrelParseError(f"expected '<elem>: <values>' in table {op}", lineno)
            i = ref(label.strip(), lineno)
            if i in rows:
                raise MrelParseError(f"duplicate row {label.strip()!r} in table {op}", lineno)
            values = [ref(t, lineno) for t in cells.split()]
            want = len(carrier) if op in BINARY else 1
            if len(values) != want:
                raise MrelParseError(f"row {label.strip()!r} of {op} needs {want} entries", lineno)
            rows[i] = values if op in BINARY else values[0]
            continue
        if head == "name":
            name = rest
        elif head == "carrier":
            if carrier is not None:
                raise MrelParseError("second carrier line", lineno)
            carrier = rest.split()
            if not carrier or len(set(carrier)) != len(carrier):
                raise MrelParseError("carrier must list distinct elements", lineno)
        elif carrier is None:
            raise MrelParseError("expected a 'carrier' line first", lineno)
        elif head == "const":
            parts = rest.split()
            if len(parts) != 2 or parts[0] not in CONSTANTS:
                raise MrelParseError(f"expected 'const {{{'|'.join(CONSTANTS)}}} <elem>'", lineno)
            consts[parts[0]] = ref(parts[1], lineno)
        elif head == "table":
            if rest not in BINARY + UNARY:
                raise MrelParseError(f"unknown table {rest!r}", lineno)
            if rest in tables:
                raise MrelParseError(f"duplicate table {rest!r}", lineno)
            op, rows, start = rest, {}, lineno
        else:
            raise MrelParseError(f"unexpected line {line!r}", lineno)
    if op is not None:
        raise MrelParseError(f"table {op} is missing 'end'", start)
    if carrier is None:
        raise MrelParseError("no 'carrier' line", None)
    for const in CONSTANTS:
        if const not in consts:
            raise MrelParseError(f"missing 'const {const}'", None)
    for needed in ("plus", "seq"):
        if needed not in tables:
            raise MrelParseError(f"missing table {needed!r}", None)
    return FiniteAlgebra(tuple(carrier), tables, consts["zero"], consts["one_seq"],
                         consts["one_par"], name=name)


# model search ----------------------------------------------------------------------

_OP_OF = {Plus: "plus", Seq: "seq", Par: "par", Dom: "dom", Anti: "anti", Star: "star",
          Dia: "dom", Box: "anti", BStar: "bstar", Univ: "univ"}


def _law_ops(law: Law) -> set[str]:
    ops = set()
    for rel in _relations(law.formula):
        for t in operators(rel.left) | operators(rel.right):
            if t in _OP_OF:
                ops.add(_OP_OF[t])
    ops.add("plus")  # every relation compares through the order
    return ops


def _join_semilattices(n: int) -> Iterator[list[list[int]]]:
    """Join tables of all partial orders on range(n) with 0 least and all binary joins."""
    pairs = [(x, y) for x in range(1, n) for y in range(1, n) if x != y]
    for choice in itertools.product((False, True), repeat=len(pairs)):
        le = {(x, x) for x in range(n)} | {(0, x) for x in range(n)}
        le |= {p for p, on in zip(pairs, choice) if on}
        if any((y, x) in le for (x, y) in le if x != y):
            continue
        if any((x, z) not in le for (x, y) in le for (y2, z) in le if y == y2):
            continue
        join = [[0] * n for _ in range(n)]
        ok = True
        for x in range(n):
            for y in range(n):
                ub = [z for z in range(n) if (x, z) in le and (y, z) in le]
                least = [z for z in ub if all((z, w) in le for w in ub)]
                if not least:
                    ok = False
                    break
                join[x][y] = least[0]
            if not ok:
                break
        if ok:
            yield join


def _free_binary(op: str, n: int, fixed: dict, symmetric: bool):
    cells = [(x, y) for x in range(n) for y in range(n)
             if (x, y) not in fixed and not (symmetric and y < x)]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for (x, y), v in fixed.items():
            table[x][y] = v
        for (x, y), v in zip(cells, values):
            table[x][y] = v
            if symmetric:
                table[y][x] = v
        yield table


def _free_unary(n: int, fixed: dict):
    cells = [x for x in range(n) if x not in fixed]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [0] * n
        for x, v in fixed.items():
            table[x] = v
        for x, v in zip(cells, values):
            table[x] = v
        yield table


def search_models(
    system: str,
    size: int,
    violate: str | None = None,
    predicate: Callable[[FiniteAlgebra], bool] | None = None,
    budget: int = 10,
) -> list[FiniteAlgebra]:
    """Enumerate table models of ``system`` on ``size`` elements.

    With ``violate`` the named axiom is dropped from the filters and must
    fail in every result.  0 and 1σ are pinned to indices 0 and 1; 1π is 1
    or 2.  Tables are filled in stages (plus, seq, dom or anti, par, star)
    and each axiom is checked as soon as every table it mentions is set.
    Results are not quotiented by isomorphism.
    """
    if size not in (2, 3, 4):
        raise ValueError("carrier size must be 2, 3 or 4")
    laws = _system(system)
    target = get_law(violate) if violate else None
    if target is not None and target not in laws:
        raise ValueError(f"{violate} is not an axiom of {system}")
    active = {law.id for law in laws} - ({target.id} if target else set())
    stages = [op for op in ("plus", "seq", "dom", "anti", "par", "star")
              if op in required_tables(system)]
    n = size
    s, z = 1, 0
    results: list[FiniteAlgebra] = []

    def fixed_cells(op: str, p: int) -> tuple[dict, bool]:
        fixed: dict = {}
        if op == "seq":
            if "proto.seq_left_zero" in active:
                fixed.update({(z, y): z for y in range(n)})
            if "proto.seq_left_unit" in active:
                fixed.update({(s, y): y for y in range(n)})
            if "proto.seq_right_unit" in active:
                fixed.update({(x, s): x for x in range(n)})
            return fixed, False
        if "proto.par_zero" in active:
            fixed.update({(z, y): z for y in range(n)})
        if "proto.par_unit" in active:
            fixed.update({(p, y): y for y in range(n)})
        comm = "proto.par_comm" in active
        if comm:
            fixed.update({(y, x): v for (x, y), v in list(fixed.items())})
        return fixed, comm

    for one_par in ([1, 2] if n >= 3 else [1]):
        for join in _join_semilattices(n):
            alg = FiniteAlgebra(tuple(f"e{i}" for i in range(n)), {"plus": join}, z, s, one_par)
            model = TableModel(alg)
            by_stage: dict[str, list] = {op: [] for op in stages}
            for law in laws:
                if law.id not in active:
                    continue
                last = max((stages.index(o) for o in _law_ops(law) if o in stages), default=0)
                by_stage[stages[last]].append((law, compile_formula(law.formula, model)))

            def passes(op: str) -> bool:
                return all(_first_failure(law, model, n, check) is None for law, check in by_stage[op])

            def fill(k: int) -> bool:
                if k == len(stages):
                    if target is not None and _first_failure(target, model, n) is None:
                        return False
                    if predicate is not None and not predicate(alg):
                        return False
                    results.append(FiniteAlgebra(
                        alg.carrier, {o: [list(r) if isinstance(r, list) else r for r in t]
                                      for o, t in alg.tables.items()},
                        z, s, one_par, name=f"{system} model {len(results) + 1}"))
                    return len(results) >= budget
                op = stages[k]
                if op == "plus":
                    candidates: Iterable = [join]
                elif op in ("seq", "par"):
                    fixed, sym = fixed_cells(op, one_par)
                    candidates = _free_binary(op, n, fixed, sym)
                else:
                    fixed = {z: z} if op == "dom" and "dp.strictness" in active else {}
                    candidates = _free_unary(n, fixed)
                for table in candidates:
                    alg.tables[op] = table
                    if passes(op) and fill(k + 1):
                        return True
                if op != "plus":
                    del alg.tables[op]
                return False

            if fill(0):
                return results
    return results


def isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    """Whether some bijection of carriers maps every shared table and constant of ``a`` onto ``b``."""
    if a.size != b.size or set(a.tables) != set(b.tables):
        return False
    n = a.size
    for perm in itertools.permutations(range(n)):
        if any(perm[getattr(a, c)] != getattr(b, c) for c in CONSTANTS):
            continue
        ok = True
        for op, table in a.tables.items():
            other = b.tables[op]
            if op in BINARY:
                ok = all(perm[table[x][y]] == other[perm[x]][perm[y]] for x in range(n) for y in range(n))
            else:
                ok = all(perm[table[x]] == other[perm[x]] for x in range(n))
            if not ok:
                break
        if ok:
            return True
    return False
