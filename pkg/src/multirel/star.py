"""Least fixpoints by ascent from the empty multirelation.

On a finite universe every isotone map on ``M(X)`` reaches its least
fixpoint after finitely many steps from the empty relation, so no
continuity argument is needed.  :class:`FixpointTrace` keeps the whole
chain because the finite-iteration comparisons reason about the iterates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import bits
from .core import Multirelation, Universe, constant, seq_compose, union
from .errors import FixpointError


@dataclass(frozen=True)
class FixpointTrace:
    iterates: tuple[Multirelation, ...]
    stabilized_at: int

    @property
    def limit(self) -> Multirelation:
        return self.iterates[self.stabilized_at]


def lfp_iterate(
    f: Callable[[Multirelation], Multirelation],
    u: Universe,
    max_steps: int | None = None,
) -> FixpointTrace:
    """Iterate ``x0 = {}``, ``x(k+1) = f(x(k))`` until two iterates agree.

    ``stabilized_at`` is the first ``k`` with ``f(x(k)) == x(k)``.  Raises
    :class:`FixpointError` when the chain stops ascending (``f`` is not
    isotone) or has not settled after ``max_steps`` applications.
    """
    if max_steps is None:
        max_steps = bits.max_steps_default(u.size)
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    x = constant("empty", u)
    chain = [x]
    for _ in range(max_steps):
        nxt = f(x)
        if nxt == x:
            return FixpointTrace(tuple(chain), len(chain) - 1)
        if not x <= nxt:
            raise FixpointError(
                f"iterate {len(chain)} does not contain its predecessor; "
                "the generating function is not isotone"
            )
        chain.append(nxt)
        x = nxt
    raise FixpointError(f"no fixpoint within {max_steps} steps")


def unfold_map(r: Multirelation, s: Multirelation) -> Callable[[Multirelation], Multirelation]:
    """The generating map ``X -> s | r . X``."""
    return lambda x: union(s, seq_compose(r, x))


def star_trace(r: Multirelation, max_steps: int | None = None) -> FixpointTrace:
    return lfp_iterate(unfold_map(r, constant("unit_seq", r.universe)), r.universe, max_steps)


def star(r: Multirelation, max_steps: int | None = None) -> Multirelation:
    """Least fixpoint of ``X -> 1s | r . X``."""
    return star_trace(r, max_steps).limit


def binary_star(r: Multirelation, s: Multirelation, max_steps: int | None = None) -> Multirelation:
    """Least fixpoint of ``X -> s | r . X``; in general larger than ``star(r) . s``."""
    r._peer(s)
    return lfp_iterate(unfold_map(r, s), r.universe, max_steps).limit


def approx_power(r: Multirelation, n: int) -> Multirelation:
    """``R^(0) = {}``, ``R^(k+1) = 1s | R . R^(k)``."""
    if n < 0:
        raise ValueError("power must be nonnegative")
    step = unfold_map(r, constant("unit_seq", r.universe))
    x = constant("empty", r.universe)
    for _ in range(n):
        x = step(x)
    return x
