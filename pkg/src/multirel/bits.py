"""Integer kernels for multirelations over ``n`` indexed elements.

A multirelation over ``X = {0, ..., n-1}`` is packed into one Python int.
Subsets of ``X`` are bitmasks ``A`` in ``range(2**n)`` and the pair
``(a, A)`` owns bit ``a * 2**n + A``.  The slice of bits belonging to one
source element ``a`` is its *row*: an int over ``2**n`` bits, one per
reachable output set.  Rows (sets of subsets) are called families below.

Everything here is a pure function of ints, so the small-universe cases are
memoised; the law sweeps hit the same arguments many times.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import FixpointError

_CACHE = 1 << 18


def width(n: int) -> int:
    """Number of subsets of an ``n``-element universe (row width in bits)."""
    return 1 << n


def row_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def members(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def rows(n: int, r: int) -> list[int]:
    m = 1 << n
    full = (1 << m) - 1
    return [(r >> (a * m)) & full for a in range(n)]


def from_rows(n: int, fams: list[int]) -> int:
    m = 1 << n
    out = 0
    for a, fam in enumerate(fams):
        out |= fam << (a * m)
    return out


def pair_bit(n: int, a: int, subset: int) -> int:
    return 1 << (a * (1 << n) + subset)


def pairs(n: int, r: int) -> Iterator[tuple[int, int]]:
    """Yield ``(element, subset)`` pairs sorted by element, then subset bits."""
    m = 1 << n
    for bit in members(r):
        yield divmod(bit, m)


def join_families(f: int, g: int) -> int:
    """Pointwise unions: the family ``{A | B : A in f, B in g}``."""
    if not f or not g:
        return 0
    out = 0
    gs = list(members(g))
    for a in members(f):
        for b in gs:
            out |= 1 << (a | b)
    return out


# constants -----------------------------------------------------------------

@lru_cache(maxsize=64)
def one_seq(n: int) -> int:
    m = 1 << n
    return sum(1 << (a * m + (1 << a)) for a in range(n))


@lru_cache(maxsize=64)
def one_par(n: int) -> int:
    m = 1 << n
    return sum(1 << (a * m) for a in range(n))


@lru_cache(maxsize=64)
def universal(n: int) -> int:
    return (1 << (n << n)) - 1


# first-order operations -----------------------------------------------------

@lru_cache(maxsize=_CACHE)
def seq(n: int, r: int, s: int) -> int:
    """Peleg sequential composition by the choice-product fold.

    For each source set ``B`` of ``r`` the achievable unions over all choice
    functions are folded element by element, keeping only the deduplicated
    family of partial unions.  ``B = {}`` always yields ``{}``.
    """
    m = 1 << n
    full = (1 << m) - 1
    s_rows = [(s >> (b * m)) & full for b in range(n)]
    lifted = {0: 1}

    def lift(big: int) -> int:
        hit = lifted.get(big)
        if hit is not None:
            return hit
        low = big & -big
        rest = lift(big ^ low)
        fam = join_families(rest, s_rows[low.bit_length() - 1])
        lifted[big] = fam
        return fam

    out = 0
    for a in range(n):
        row = (r >> (a * m)) & full
        acc = 0
        for big in members(row):
            acc |= lift(big)
        out |= acc << (a * m)
    return out


@lru_cache(maxsize=_CACHE)
def par(n: int, r: int, s: int) -> int:
    m = 1 << n
    full = (1 << m) - 1
    out = 0
    for a in range(n):
        shift = a * m
        out |= join_families((r >> shift) & full, (s >> shift) & full) << shift
    return out


@lru_cache(maxsize=_CACHE)
def dom(n: int, r: int) -> int:
    m = 1 << n
    full = (1 << m) - 1
    out = 0
    for a in range(n):
        if (r >> (a * m)) & full:
            out |= 1 << (a * m + (1 << a))
    return out


def anti(n: int, r: int) -> int:
    return one_seq(n) ^ dom(n, r)


def is_subid(n: int, r: int) -> bool:
    return r & ~one_seq(n) == 0


def lift_set(n: int, mask: int) -> int:
    m = 1 << n
    return sum(1 << (a * m + (1 << a)) for a in members(mask))


def lower(n: int, p: int) -> int:
    """Element mask of a subidentity (caller guarantees ``is_subid``)."""
    m = 1 << n
    mask = 0
    for a in range(n):
        if p >> (a * m + (1 << a)) & 1:
            mask |= 1 << a
    return mask


def diamond_direct(n: int, r: int, p: int) -> int:
    """``{(a,{a}) | some (a,B) in r with B inside p}`` without composing."""
    inside = lower(n, p)
    m = 1 << n
    full = (1 << m) - 1
    out = 0
    for a in range(n):
        row = (r >> (a * m)) & full
        if any(big & ~inside == 0 for big in members(row)):
            out |= 1 << (a * m + (1 << a))
    return out


def box_direct(n: int, r: int, p: int) -> int:
    """``{(a,{a}) | every (a,B) in r has B meeting p}``; vacuous rows count."""
    inside = lower(n, p)
    m = 1 << n
    full = (1 << m) - 1
    out = 0
    for a in range(n):
        row = (r >> (a * m)) & full
        if all(big & inside for big in members(row)):
            out |= 1 << (a * m + (1 << a))
    return out


# fixpoints -------------------------------------------------------------------

def max_steps_default(n: int) -> int:
    return 1 << (n + 4)


@lru_cache(maxsize=_CACHE)
def bstar(n: int, r: int, s: int) -> int:
    """Least fixpoint of ``X -> s | r.X`` by ascent from the empty relation."""
    x = 0
    for _ in range(max_steps_default(n)):
        nxt = s | seq(n, r, x)
        if nxt == x:
            return x
        x = nxt
    raise FixpointError(f"no fixpoint within {max_steps_default(n)} steps")


def star(n: int, r: int) -> int:
    return bstar(n, r, one_seq(n))
