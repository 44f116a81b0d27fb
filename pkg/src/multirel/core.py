"""Multirelations over a finite universe and their first-order operations.

Values are immutable.  A :class:`Multirelation` is stored as a packed int
(see :mod:`multirel.bits`), so equality, hashing and set algebra are exact
and cheap.  Equality is extensional: no up-closure or other normalisation is
ever applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import bits
from .errors import NotSubidentity, UniverseMismatch, UniverseTooLarge

#: Operations refuse universes larger than this; costs grow like ``2**|X|``.
MAX_UNIVERSE_SIZE = 16


@dataclass(frozen=True)
class Universe:
    """An ordered finite carrier.  Element order fixes the bit layout."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate element names in {elems}")
        for e in elems:
            if not isinstance(e, str) or not e:
                raise ValueError(f"element names must be nonempty strings, got {e!r}")
        object.__setattr__(self, "elements", elems)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of the universe") from None

    def mask(self, names: Iterable[str]) -> int:
        out = 0
        for name in names:
            out |= 1 << self.index(name)
        return out

    def names(self, mask: int) -> list[str]:
        return [self.elements[i] for i in bits.members(mask)]

    def check_size(self) -> None:
        if self.size > MAX_UNIVERSE_SIZE:
            raise UniverseTooLarge(
                f"universe has {self.size} elements; limit is {MAX_UNIVERSE_SIZE}"
            )


def format_subset(u: Universe, mask: int) -> str:
    return "{" + ", ".join(u.names(mask)) + "}"


@dataclass(frozen=True)
class ElementSet:
    universe: Universe
    mask: int

    @classmethod
    def of(cls, universe: Universe, names: Iterable[str]) -> ElementSet:
        return cls(universe, universe.mask(names))

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.universe.size:
            raise ValueError("mask has bits outside the universe")

    def __iter__(self) -> Iterator[str]:
        return iter(self.universe.names(self.mask))

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.universe.index(name) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return format_subset(self.universe, self.mask)


@dataclass(frozen=True)
class Multirelation:
    """A finite set of pairs ``(a, A)`` with ``a`` in X and ``A`` a subset of X."""

    universe: Universe
    bits: int

    def __post_init__(self):
        self.universe.check_size()
        if self.bits < 0 or self.bits >> (self.universe.size << self.universe.size):
            raise ValueError("bit pattern does not fit the universe")

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, Iterable[str]]]) -> Multirelation:
        universe.check_size()
        n = universe.size
        out = 0
        for elem, image in pairs:
            out |= bits.pair_bit(n, universe.index(elem), universe.mask(image))
        return cls(universe, out)

    @property
    def n(self) -> int:
        return self.universe.size

    def pairs(self) -> Iterator[tuple[str, frozenset[str]]]:
        """Pairs in canonical order: by element index, then by subset bits."""
        names = self.universe.elements
        for a, subset in bits.pairs(self.n, self.bits):
            yield names[a], frozenset(self.universe.names(subset))

    def index_pairs(self) -> Iterator[tuple[int, int]]:
        return bits.pairs(self.n, self.bits)

    def __contains__(self, pair: tuple[str, Iterable[str]]) -> bool:
        elem, image = pair
        u = self.universe
        return bool(self.bits & bits.pair_bit(u.size, u.index(elem), u.mask(image)))

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return self.pairs()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _peer(self, other: Multirelation) -> None:
        if not isinstance(other, Multirelation):
            raise TypeError(f"expected a Multirelation, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("multirelations live over different universes")

    def __or__(self, other: Multirelation) -> Multirelation:
        return union(self, other)

    def __and__(self, other: Multirelation) -> Multirelation:
        self._peer(other)
        return Multirelation(self.universe, self.bits & other.bits)

    def __sub__(self, other: Multirelation) -> Multirelation:
        self._peer(other)
        return Multirelation(self.universe, self.bits & ~other.bits)

    def __le__(self, other: Multirelation) -> bool:
        self._peer(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Multirelation) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Multirelation) -> bool:
        return other <= self

    def __gt__(self, other: Multirelation) -> bool:
        return other < self

    def __str__(self) -> str:
        u = self.universe
        body = ", ".join(
            f"{u.elements[a]} -> {format_subset(u, subset)}"
            for a, subset in self.index_pairs()
        )
        return "{ " + body + " }" if body else "{}"


# constructors --------------------------------------------------------------

CONSTANTS = ("empty", "unit_seq", "unit_par", "universal")


def constant(kind: str, u: Universe) -> Multirelation:
    u.check_size()
    n = u.size
    if kind == "empty":
        return Multirelation(u, 0)
    if kind == "unit_seq":
        return Multirelation(u, bits.one_seq(n))
    if kind == "unit_par":
        return Multirelation(u, bits.one_par(n))
    if kind == "universal":
        return Multirelation(u, bits.universal(n))
    raise ValueError(f"unknown constant kind {kind!r}; expected one of {CONSTANTS}")


# operations ----------------------------------------------------------------

def _same(r: Multirelation, s: Multirelation) -> Universe:
    r._peer(s)
    return r.universe


def union(r: Multirelation, s: Multirelation) -> Multirelation:
    u = _same(r, s)
    return Multirelation(u, r.bits | s.bits)


def seq_compose(r: Multirelation, s: Multirelation) -> Multirelation:
    """Peleg's sequential composition ``r . s``."""
    u = _same(r, s)
    return Multirelation(u, bits.seq(u.size, r.bits, s.bits))


def par_compose(r: Multirelation, s: Multirelation) -> Multirelation:
    """Parallel composition: ``{(a, A | B) | (a, A) in r, (a, B) in s}``."""
    u = _same(r, s)
    return Multirelation(u, bits.par(u.size, r.bits, s.bits))


def domain(r: Multirelation) -> Multirelation:
    return Multirelation(r.universe, bits.dom(r.n, r.bits))


def antidomain(r: Multirelation) -> Multirelation:
    return Multirelation(r.universe, bits.anti(r.n, r.bits))


def is_subidentity(r: Multirelation) -> bool:
    return bits.is_subid(r.n, r.bits)


def require_subidentity(p: Multirelation, what: str = "argument") -> None:
    if not is_subidentity(p):
        raise NotSubidentity(f"{what} is not a subidentity: {p}")


def lift_set(s: ElementSet) -> Multirelation:
    """The subidentity ``{(a, {a}) | a in s}``."""
    return Multirelation(s.universe, bits.lift_set(s.universe.size, s.mask))


def lower_subidentity(p: Multirelation) -> ElementSet:
    require_subidentity(p)
    return ElementSet(p.universe, bits.lower(p.n, p.bits))


def complement_subidentity(p: Multirelation) -> Multirelation:
    require_subidentity(p)
    return Multirelation(p.universe, bits.one_seq(p.n) ^ p.bits)


def subidentities(u: Universe) -> Iterator[Multirelation]:
    """All ``2**|X|`` subidentities, ordered by element mask."""
    for mask in range(1 << u.size):
        yield Multirelation(u, bits.lift_set(u.size, mask))
