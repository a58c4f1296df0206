"""Reduced Groebner bases of kernel lattice ideals, and binomial division.

A lattice vector v with v.p = 0 corresponds to the binomial
x^(v+) - x^(v-); both sides have the same weighted degree, so the whole
ideal is homogeneous for the grading.  Buchberger's algorithm stays inside
binomials: every S-polynomial and every reduction of a binomial is again a
binomial, represented here as an oriented pair of exponent tuples.

The basis rows only generate the kernel ideal up to saturation by the
product of the variables.  One pass per variable fixes this: under an order
whose cheapest variable is x_i, the head of a primitive homogeneous binomial
is x_i-free, and stripping common variable factors from a basis computed in
that order realises the quotient by powers of x_i.  The grading is positive,
so a single pass over all variables suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush

from .arith import (
    Vector,
    Weights,
    negative_part,
    pdegree,
    positive_part,
    rational_rank,
)
from .order import GT, LT, OrderConfig, compare

__all__ = [
    "Binomial",
    "GroebnerBasis",
    "format_binomial",
    "format_monomial",
    "lattice_groebner",
    "normal_form",
    "reduce_binomial",
    "validate_basis",
]


@dataclass(frozen=True)
class Binomial:
    """Oriented binomial x^head - x^tail, head above tail in the basis order."""

    head: Vector
    tail: Vector

    @property
    def vector(self) -> Vector:
        """The lattice vector head - tail."""
        return tuple(h - t for h, t in zip(self.head, self.tail))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis of a kernel lattice ideal, sorted ascending by head."""

    elements: tuple[Binomial, ...]
    order: OrderConfig

    @property
    def weights(self) -> Weights:
        return self.order.weights

    def heads(self) -> tuple[Vector, ...]:
        return tuple(g.head for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# -- internal monomial helpers (pairs of plain tuples, no validation) --------


def _strip(h: Vector, t: Vector) -> tuple[Vector, Vector]:
    """Divide out the common monomial factor of the two sides."""
    m = tuple(min(a, b) for a, b in zip(h, t))
    if any(m):
        h = tuple(a - b for a, b in zip(h, m))
        t = tuple(a - b for a, b in zip(t, m))
    return h, t


def _orient(u: Vector, v: Vector, key) -> tuple[Vector, Vector] | None:
    ku, kv = key(u), key(v)
    if ku == kv:
        return None
    return (u, v) if ku > kv else (v, u)


def _multiplicity(m: Vector, h: Vector) -> int:
    """Largest k with x^(k*h) dividing x^m (0 when h does not divide m)."""
    k = 0
    first = True
    for mi, hi in zip(m, h):
        if hi:
            q = mi // hi
            if q == 0:
                return 0
            if first or q < k:
                k = q
                first = False
    return k


def _nf_monomial(m: Vector, basis) -> Vector:
    """Normal form of a monomial: replace by head -> tail while possible.

    Each hit applies the reducer with full multiplicity, so the step count
    does not scale with the size of the exponents.
    """
    while True:
        for h, t in basis:
            k = _multiplicity(m, h)
            if k:
                m = tuple(a + k * (ti - hi) for a, hi, ti in zip(m, h, t))
                break
        else:
            return m


def _buchberger(gens, key):
    """Buchberger's algorithm on oriented primitive binomial pairs.

    Pairs are processed by ascending weighted degree of the lcm of the heads
    (ties by the term order on the lcm, then by insertion index); pairs with
    coprime heads are skipped.  New remainders are fully reduced and made
    primitive before insertion.
    """
    basis: list[tuple[Vector, Vector]] = []
    seen: set[tuple[Vector, Vector]] = set()
    heap: list = []

    def push(h: Vector, t: Vector) -> None:
        if (h, t) in seen:
            return
        seen.add((h, t))
        idx = len(basis)
        for i in range(idx):
            hi = basis[i][0]
            lcm = tuple(max(a, b) for a, b in zip(hi, h))
            heappush(heap, (key(lcm), i, idx))
        basis.append((h, t))

    for h, t in gens:
        push(h, t)

    while heap:
        _, i, j = heappop(heap)
        (hf, tf), (hg, tg) = basis[i], basis[j]
        if all(a == 0 or b == 0 for a, b in zip(hf, hg)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(hf, hg))
        u = tuple(l - a + b for l, a, b in zip(lcm, hf, tf))
        v = tuple(l - a + b for l, a, b in zip(lcm, hg, tg))
        u = _nf_monomial(u, basis)
        v = _nf_monomial(v, basis)
        if u == v:
            continue
        oriented = _orient(u, v, key)
        push(*_strip(*oriented))
    return basis


def _interreduce(basis, key):
    """Minimalize heads, then reduce every tail to its normal form."""
    items = sorted(set(basis), key=lambda b: (key(b[0]), key(b[1])))
    kept: list[tuple[Vector, Vector]] = []
    for h, t in items:
        if not any(_multiplicity(h, h2) for h2, _ in kept):
            kept.append((h, t))
    return [(h, _nf_monomial(t, kept)) for h, t in kept]


def lattice_groebner(p: Weights, basis_rows, cfg: OrderConfig) -> GroebnerBasis:
    """Reduced Groebner basis of the saturated kernel lattice ideal.

    basis_rows must be n-1 linearly independent rows spanning the kernel
    lattice of p (weighted degree 0 each).  The requested order's cheapest
    variable is saturated last so the final Buchberger run already happens
    in the target order.
    """
    if cfg.weights != p:
        raise ValueError("order configuration was built for different weights")
    n = p.n
    rows = [tuple(r) for r in basis_rows]
    if len(rows) != n - 1:
        raise ValueError(f"expected {n - 1} basis rows, got {len(rows)}")
    for r in rows:
        if len(r) != n:
            raise ValueError(f"basis row {r} has dimension {len(r)}, expected {n}")
        if pdegree(r, p) != 0:
            raise ValueError(f"basis row {r} is not homogeneous: degree {pdegree(r, p)}")
    if rational_rank(rows) != n - 1:
        raise ValueError("basis rows are linearly dependent")

    cur = [(positive_part(r), negative_part(r)) for r in rows]
    passes = [v for v in range(1, n + 1) if v != cfg.revlex_variable]
    passes.append(cfg.revlex_variable)
    for var in passes:
        key = cfg.with_revlex(var).sort_key
        oriented = []
        for a, b in cur:
            pair = _orient(a, b, key)
            if pair is None:
                continue
            oriented.append(_strip(*pair))
        cur = _interreduce(_buchberger(oriented, key), key)

    basis = GroebnerBasis(tuple(Binomial(h, t) for h, t in cur), cfg)
    validate_basis(basis)
    return basis


def validate_basis(G: GroebnerBasis) -> None:
    """Check the structural invariants of a reduced kernel-ideal basis.

    Raises ValueError on: inhomogeneous or misoriented elements, overlapping
    supports, a head dividing another head or any tail, a head divisible by
    the distinguished variable, missing pure-power heads x_i^e with
    e <= p_rv for every other variable, or elements out of ascending order.
    """
    cfg = G.order
    p = cfg.weights
    n = p.n
    rv = cfg.revlex_variable - 1
    key = cfg.sort_key
    prev_key = None
    for g in G.elements:
        if len(g.head) != n or len(g.tail) != n:
            raise ValueError(f"element {g} has wrong dimension")
        if pdegree(g.head, p) != pdegree(g.tail, p):
            raise ValueError(f"element {g} is not homogeneous")
        if compare(g.head, g.tail, cfg) != GT:
            raise ValueError(f"element {g} is not oriented head-first")
        if any(a and b for a, b in zip(g.head, g.tail)):
            raise ValueError(f"element {g} has overlapping support")
        if g.head[rv]:
            raise ValueError(f"head of {g} is divisible by the cheapest variable")
        k = key(g.head)
        if prev_key is not None and k <= prev_key:
            raise ValueError("elements are not in ascending head order")
        prev_key = k
    heads = G.heads()
    for i, h in enumerate(heads):
        for j, g in enumerate(G.elements):
            if i != j and _multiplicity(g.head, h):
                raise ValueError(f"head {h} divides head {g.head}")
            if _multiplicity(g.tail, h):
                raise ValueError(f"head {h} divides tail {g.tail}")
    p_rv = p.entries[rv]
    for i in range(n):
        if i == rv:
            continue
        covered = any(
            h[i] and h[i] <= p_rv and all(x == 0 for j, x in enumerate(h) if j != i)
            for h in heads
        )
        if not covered:
            raise ValueError(f"no pure power of variable {i + 1} at most p_rv in the heads")


def normal_form(m: Vector, G: GroebnerBasis) -> Vector:
    """Normal form of the monomial x^m modulo the basis."""
    n = G.weights.n
    if len(m) != n:
        raise ValueError(f"expected a vector of dimension {n}, got {len(m)}")
    if any(x < 0 for x in m):
        raise ValueError("normal_form expects a nonnegative exponent vector")
    return _nf_monomial(m, [(g.head, g.tail) for g in G.elements])


def reduce_binomial(a: Vector, G: GroebnerBasis) -> tuple[Vector, Vector]:
    """Divide x^(a+) - x^(a-) by the basis; return (w, c) with remainder
    x^w * (x^(c+) - x^(c-)) and x^(c-) below x^(c+) in the order.

    Requires the sign pattern a_1 <= 0, a_i >= 0 for i >= 2, and a basis
    whose cheapest variable is the first one; then no head touches x^(a-),
    and c can only be negative in its first coordinate.
    """
    if G.order.revlex_variable != 1:
        raise ValueError("reduce_binomial needs a basis with cheapest variable 1")
    if len(a) != G.weights.n:
        raise ValueError(f"expected a vector of dimension {G.weights.n}, got {len(a)}")
    if a[0] > 0 or any(x < 0 for x in a[1:]):
        raise ValueError("expected a_1 <= 0 and a_i >= 0 for i >= 2")
    u = normal_form(positive_part(a), G)
    v = normal_form(negative_part(a), G)
    w = tuple(min(x, y) for x, y in zip(u, v))
    if u == v:
        return w, (0,) * len(a)
    if compare(u, v, G.order) == LT:
        u, v = v, u
    c = tuple(x - y for x, y in zip(u, v))
    return w, c


def format_monomial(v: Vector) -> str:
    """Render x^v like ``x1^2*x3``; the empty exponent renders as ``1``."""
    parts = []
    for i, e in enumerate(v):
        if e == 0:
            continue
        parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Binomial) -> str:
    """Render a binomial like ``x3^2 - x2^3``."""
    return f"{format_monomial(b.head)} - {format_monomial(b.tail)}"
