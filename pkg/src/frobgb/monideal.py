"""Monomial ideals: membership, intersections, and irreducible decomposition.

A monomial ideal is stored by its minimal generating exponent vectors.  An
irreducible component is the vector v of the ideal generated by x_i^(v_i)
for the coordinates with v_i > 0; the functions here return components as
plain tuples.

The main decomposition path targets head ideals of kernel lattice bases:
generators free of the first variable and, for every other variable, some
pure power present.  Components of such an ideal have first coordinate 0 and
each remaining coordinate equal to some generator exponent, so candidates
can be enumerated from the generators and filtered by two membership tests.
A splitting-based path for arbitrary proper monomial ideals is provided as
an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arith import Vector, Weights

__all__ = [
    "MonomialIdeal",
    "component_ideal",
    "contains_monomial",
    "format_component",
    "initial_ideal",
    "intersect",
    "irreducible_decomposition",
    "irreducible_decomposition_general",
    "minimalize",
]


def _divides(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens) -> frozenset[Vector]:
    """Drop every generator strictly divisible by another one."""
    gens = set(gens)
    kept = set()
    for g in sorted(gens, key=lambda v: (sum(v), v)):
        if not any(_divides(k, g) for k in kept):
            kept.add(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in n variables, held by minimal generators."""

    n: int
    generators: frozenset[Vector]

    def __post_init__(self) -> None:
        gens = frozenset(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.n:
                raise ValueError(f"generator {g} has dimension {len(g)}, expected {self.n}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
        for a in gens:
            for b in gens:
                if a != b and _divides(a, b):
                    raise ValueError(f"generators not minimal: {a} divides {b}")

    @classmethod
    def from_generators(cls, n: int, gens) -> "MonomialIdeal":
        return cls(n, minimalize(tuple(g) for g in gens))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.generators

    def sorted_generators(self) -> tuple[Vector, ...]:
        return tuple(sorted(self.generators))


def initial_ideal(G) -> MonomialIdeal:
    """The head ideal of a reduced basis; heads are already minimal."""
    return MonomialIdeal(G.weights.n, frozenset(G.heads()))


def contains_monomial(I: MonomialIdeal, m: Vector) -> bool:
    """True iff x^m lies in I, i.e. some generator divides m."""
    if len(m) != I.n:
        raise ValueError(f"expected a vector of dimension {I.n}, got {len(m)}")
    if any(x < 0 for x in m):
        raise ValueError(f"monomial {m} has a negative exponent")
    return any(_divides(g, m) for g in I.generators)


def component_ideal(v: Vector) -> MonomialIdeal:
    """The irreducible ideal of v: generated by x_i^(v_i) for v_i > 0."""
    if any(x < 0 for x in v):
        raise ValueError(f"component {v} has a negative entry")
    n = len(v)
    gens = []
    for i, e in enumerate(v):
        if e > 0:
            g = [0] * n
            g[i] = e
            gens.append(tuple(g))
    return MonomialIdeal(n, frozenset(gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection: generated by the lcms of generator pairs."""
    if I.n != J.n:
        raise ValueError("ideals live in different polynomial rings")
    if I.is_zero or J.is_zero:
        return MonomialIdeal(I.n, frozenset())
    lcms = {
        tuple(max(x, y) for x, y in zip(a, b))
        for a in I.generators
        for b in J.generators
    }
    return MonomialIdeal.from_generators(I.n, lcms)


def _check_head_shape(I: MonomialIdeal) -> None:
    for g in I.generators:
        if g[0] != 0:
            raise ValueError("ideal has a generator divisible by the first variable")
    for i in range(1, I.n):
        if not any(
            g[i] and all(x == 0 for j, x in enumerate(g) if j != i)
            for g in I.generators
        ):
            raise ValueError(
                f"ideal is not artinian after projecting out the first variable:"
                f" no pure power of variable {i + 1}"
            )


def irreducible_decomposition(I: MonomialIdeal, p: Weights) -> frozenset[Vector]:
    """Irredundant irreducible decomposition of a head-shaped ideal.

    Components v have v_1 = 0 and v_i drawn from generator exponents; v is a
    component exactly when the shifted monomial m with m_1 = 0, m_i = v_i - 1
    is outside I while every m + e_i, i >= 2, lies inside.
    """
    if I.n != p.n:
        raise ValueError("ideal and weights have different dimensions")
    if I.is_unit:
        raise ValueError("the unit ideal has no irreducible decomposition")
    _check_head_shape(I)
    n = I.n
    gens = I.sorted_generators()
    candidates = [sorted({g[i] for g in gens if g[i]}) for i in range(1, n)]

    out: list[Vector] = []
    m = [0] * n

    def in_ideal_partial(upto: int) -> bool:
        # True when some generator supported on assigned coordinates (1..upto)
        # divides the partial monomial, forcing every completion into I.
        for g in gens:
            if all(x == 0 for x in g[upto + 1 :]) and all(
                g[j] <= m[j] for j in range(1, upto + 1)
            ):
                return True
        return False

    def walk(i: int) -> None:
        if i == n:
            for j in range(1, n):
                m[j] += 1
                inside = any(_divides(g, m) for g in gens)
                m[j] -= 1
                if not inside:
                    return
            out.append(tuple(0 if j == 0 else m[j] + 1 for j in range(n)))
            return
        for val in candidates[i - 1]:
            m[i] = val - 1
            if not in_ideal_partial(i):
                walk(i + 1)
        m[i] = 0

    walk(1)
    return frozenset(out)


def irreducible_decomposition_general(I: MonomialIdeal) -> frozenset[Vector]:
    """Irredundant irreducible decomposition of any proper monomial ideal.

    Splits a generator with at least two variables in its support into two
    coprime factors until every branch is generated by pure powers, then
    removes redundant components.  Intended for desk-scale cross-checks.
    """
    if I.is_unit:
        raise ValueError("the unit ideal has no irreducible decomposition")
    n = I.n
    components: set[Vector] = set()
    stack = [I.generators]
    while stack:
        gens = stack.pop()
        split = None
        for g in sorted(gens):
            support = [i for i, e in enumerate(g) if e]
            if len(support) >= 2:
                split = (g, support[0])
                break
        if split is None:
            v = [0] * n
            for g in gens:
                for i, e in enumerate(g):
                    if e:
                        v[i] = e
            components.add(tuple(v))
            continue
        g, i = split
        power = [0] * n
        power[i] = g[i]
        rest = list(g)
        rest[i] = 0
        stack.append(minimalize(set(gens) | {tuple(power)}))
        stack.append(minimalize(set(gens) | {tuple(rest)}))

    # Drop dominated components, then any whose removal keeps the intersection.
    comps = set(components)
    for v, w in combinations(sorted(components), 2):
        fv, fw = component_ideal(v), component_ideal(w)
        if _ideal_subset(fv, fw):
            comps.discard(w)
        elif _ideal_subset(fw, fv):
            comps.discard(v)
    changed = True
    while changed:
        changed = False
        for v in sorted(comps):
            rest = [w for w in comps if w != v]
            if not rest:
                break
            K = component_ideal(rest[0])
            for w in rest[1:]:
                K = intersect(K, component_ideal(w))
            if K == intersect(K, component_ideal(v)):
                comps.discard(v)
                changed = True
                break
    return frozenset(comps)


def _ideal_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I is contained in J."""
    return all(contains_monomial(J, g) for g in I.generators)


def format_component(v: Vector) -> str:
    """Render a component vector like ``(0,3,2)``."""
    return "(" + ",".join(str(x) for x in v) + ")"
