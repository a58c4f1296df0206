"""Degree-first term order on exponent vectors.

Monomials are compared by weighted degree first; ties are broken so that the
distinguished variable is the cheapest one (a larger exponent there makes a
monomial smaller).  Two tie-break completions are provided; every choice
keeps the degree comparison first, so each one is a genuine term order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .arith import Vector, Weights

LT, EQ, GT = -1, 0, 1

_TIE_BREAKS = ("revlex", "lex")

__all__ = ["EQ", "GT", "LT", "OrderConfig", "compare", "divides"]


@lru_cache(maxsize=None)
def _scan_order(n: int, revlex_variable: int) -> tuple[int, ...]:
    first = revlex_variable - 1
    return (first,) + tuple(i for i in range(n) if i != first)


@dataclass(frozen=True)
class OrderConfig:
    """A weighted degree-first order with a distinguished cheapest variable.

    revlex_variable is 1-indexed; with the default tie_break "revlex" the
    comparison scans that coordinate first and then the rest in ascending
    position, declaring the vector with the larger entry at the first
    difference to be the smaller monomial.  The "lex" completion keeps the
    distinguished coordinate's role and orders the remaining coordinates
    lexicographically instead.
    """

    weights: Weights
    revlex_variable: int = 1
    tie_break: str = "revlex"

    def __post_init__(self) -> None:
        if not 1 <= self.revlex_variable <= self.weights.n:
            raise ValueError(
                f"revlex_variable must be in 1..{self.weights.n},"
                f" got {self.revlex_variable}"
            )
        if self.tie_break not in _TIE_BREAKS:
            raise ValueError(f"unknown tie_break {self.tie_break!r}")

    def with_revlex(self, variable: int) -> "OrderConfig":
        return replace(self, revlex_variable=variable)

    def sort_key(self, v: Vector) -> tuple[int, ...]:
        """Monotone embedding of the order into tuples under lexicographic
        comparison; usable as a sort or heap key."""
        p = self.weights.entries
        deg = sum(a * b for a, b in zip(v, p))
        if self.tie_break == "revlex":
            scan = _scan_order(len(p), self.revlex_variable)
            return (deg,) + tuple(-v[i] for i in scan)
        first = self.revlex_variable - 1
        rest = tuple(v[i] for i in range(len(p)) if i != first)
        return (deg, -v[first]) + rest


def _validate(v: Vector, n: int) -> None:
    if len(v) != n:
        raise ValueError(f"expected a vector of dimension {n}, got {len(v)}")
    if any(x < 0 for x in v):
        raise ValueError("term order comparisons are defined on nonnegative vectors")


def compare(a: Vector, b: Vector, cfg: OrderConfig) -> int:
    """LT, EQ or GT for the monomials x^a versus x^b."""
    n = cfg.weights.n
    _validate(a, n)
    _validate(b, n)
    ka = cfg.sort_key(a)
    kb = cfg.sort_key(b)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


def divides(a: Vector, b: Vector) -> bool:
    """True iff x^a divides x^b, i.e. a <= b componentwise."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} versus {len(b)}")
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise ValueError("divisibility is defined on nonnegative vectors")
    return all(x <= y for x, y in zip(a, b))
