"""Weighted Hilbert function of the quotient by a head ideal.

For the head ideal of a kernel lattice basis the quotient has a 0/1-valued
weighted Hilbert function: the value at t counts the standard monomials of
weighted degree t, which is 1 exactly when t is representable.  The smallest
degree from which the function is constantly 1 (the index of regularity) is
the Frobenius number plus one.

This module is a verification tool: values are found by bounded enumeration
and requests with too large a candidate box are refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Weights, pdegree
from .monideal import MonomialIdeal, irreducible_decomposition

__all__ = ["EnumerationTooLarge", "HilbertContext", "hilbert_value", "index_of_regularity"]

ENUMERATION_LIMIT = 10_000_000


class EnumerationTooLarge(ValueError):
    """The candidate monomial box for this degree exceeds the fixed budget."""


@dataclass(frozen=True)
class HilbertContext:
    """A head-shaped monomial ideal together with the grading weights."""

    ideal: MonomialIdeal
    weights: Weights

    def __post_init__(self) -> None:
        if self.ideal.n != self.weights.n:
            raise ValueError("ideal and weights have different dimensions")
        for g in self.ideal.generators:
            if g[0] != 0:
                raise ValueError("ideal has a generator divisible by the first variable")
        for i in range(1, self.ideal.n):
            if not any(
                g[i] and all(x == 0 for j, x in enumerate(g) if j != i)
                for g in self.ideal.generators
            ):
                raise ValueError(f"no pure power of variable {i + 1} among the generators")


def hilbert_value(ctx: HilbertContext, t: int) -> int:
    """Number of standard monomials of weighted degree t.

    Exponents of variables beyond the first are capped below the smallest
    pure-power generator, the first variable only by t; the product of the
    per-variable candidate counts must stay within the enumeration budget.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    p = ctx.weights.entries
    n = len(p)
    gens = ctx.ideal.sorted_generators()

    bounds = [t // p[0]]
    for i in range(1, n):
        pure = min(g[i] for g in gens if g[i] and all(x == 0 for j, x in enumerate(g) if j != i))
        bounds.append(min(t // p[i], pure - 1))
    box = 1
    for b in bounds:
        box *= b + 1
    if box > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"degree {t} spans {box} candidate monomials, over the limit {ENUMERATION_LIMIT}"
        )

    m = [0] * n
    count = 0

    def blocked(low: int) -> bool:
        # a generator supported on the assigned coordinates low..n-1 puts the
        # whole subtree inside the ideal
        for g in gens:
            if all(x == 0 for x in g[1:low]) and all(g[j] <= m[j] for j in range(low, n)):
                return True
        return False

    def walk(i: int, rem: int) -> None:
        nonlocal count
        if i == 0:
            if rem % p[0] == 0 and rem // p[0] <= bounds[0]:
                count += 1
            return
        for val in range(min(rem // p[i], bounds[i]) + 1):
            m[i] = val
            if not blocked(i):
                walk(i - 1, rem - val * p[i])
        m[i] = 0

    walk(n - 1, t)
    return count


def index_of_regularity(ctx: HilbertContext) -> int:
    """Smallest r with hilbert_value equal to 1 from r on.

    Read off the staircase corners of the decomposition: one past the
    largest weighted degree of a corner, and 0 when no degree is missing.
    """
    comps = irreducible_decomposition(ctx.ideal, ctx.weights)
    worst = max(pdegree(tuple(x - 1 for x in v), ctx.weights) for v in comps)
    return worst + 1
