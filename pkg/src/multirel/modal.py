"""Diamond and box over multirelations.

Each operator comes twice: through domain/antidomain and composition, and
as the direct set comprehension over output sets.  The two routes are kept
independent so each serves as the other's oracle.
"""

from __future__ import annotations

from . import bits
from .core import (
    Multirelation,
    antidomain,
    complement_subidentity,
    domain,
    require_subidentity,
    seq_compose,
)


def diamond(r: Multirelation, p: Multirelation) -> Multirelation:
    """``<r>p = d(r . p)``."""
    require_subidentity(p, "diamond argument")
    return domain(seq_compose(r, p))


def diamond_direct(r: Multirelation, p: Multirelation) -> Multirelation:
    """States with some ``(a, B)`` in ``r`` such that every ``b`` in ``B`` lies in ``p``."""
    require_subidentity(p, "diamond argument")
    r._peer(p)
    return Multirelation(r.universe, bits.diamond_direct(r.n, r.bits, p.bits))


def box(r: Multirelation, p: Multirelation) -> Multirelation:
    """``[r]p = a(r . a(p))``; for a subidentity, ``a(p)`` is its complement."""
    require_subidentity(p, "box argument")
    return antidomain(seq_compose(r, complement_subidentity(p)))


def box_direct(r: Multirelation, p: Multirelation) -> Multirelation:
    """States where every ``(a, B)`` in ``r`` has ``B`` meeting ``p``.

    A state with no pair in ``r`` satisfies this vacuously, and a pair
    ``(a, {})`` never meets ``p``.
    """
    require_subidentity(p, "box argument")
    r._peer(p)
    return Multirelation(r.universe, bits.box_direct(r.n, r.bits, p.bits))
