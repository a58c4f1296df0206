"""Exact integer vector arithmetic: weight vectors, extended-gcd chains,
kernel lattice bases, and rational-arithmetic LLL reduction.

Exponent vectors and lattice vectors are plain ``tuple[int, ...]``.  Python
integers keep every operation exact at any magnitude, so nothing here is
limited to machine words.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]

__all__ = [
    "CoprimeViolation",
    "Vector",
    "Weights",
    "as_weights",
    "gcd_chain",
    "kernel_basis",
    "lll_reduce",
    "negative_part",
    "pdegree",
    "positive_part",
    "rational_rank",
    "representable_window",
    "solve_degree",
    "xgcd",
]


class CoprimeViolation(ValueError):
    """The weight entries do not have greatest common divisor 1."""


@dataclass(frozen=True)
class Weights:
    """Positive integers (p_1, ..., p_n) with gcd 1, used as a grading.

    The weighted degree of an exponent vector v is the dot product v.p;
    duplicates among the entries are allowed.
    """

    entries: Vector

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("weights must be non-empty")
        for w in entries:
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValueError(f"weight {w!r} is not an integer")
            if w <= 0:
                raise ValueError(f"weight {w} is not positive")
        g = 0
        for w in entries:
            g = gcd(g, w)
        if g != 1:
            raise CoprimeViolation(f"gcd is {g}, not 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def degree(self, v: Vector) -> int:
        return pdegree(v, self)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def as_weights(p: Weights | Iterable[int]) -> Weights:
    """A Weights instance passes through; any other iterable of integers is
    validated by the Weights constructor."""
    if isinstance(p, Weights):
        return p
    return Weights(tuple(p))


def _check_dim(v: Vector, n: int) -> None:
    if len(v) != n:
        raise ValueError(f"expected a vector of dimension {n}, got {len(v)}")


def pdegree(v: Vector, p: Weights) -> int:
    """Weighted degree of v: the dot product v.p."""
    _check_dim(v, p.n)
    return sum(a * b for a, b in zip(v, p.entries))


def positive_part(v: Vector) -> Vector:
    """Componentwise max(v, 0)."""
    return tuple(x if x > 0 else 0 for x in v)


def negative_part(v: Vector) -> Vector:
    """Componentwise max(-v, 0), so that v = positive_part - negative_part."""
    return tuple(-x if x < 0 else 0 for x in v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def gcd_chain(p: Weights) -> Vector:
    """A vector v with v.p = 1, built by a left fold of extended gcds.

    The coefficients are whatever back-substitution produces; they are not
    normalised beyond the defining identity.
    """
    coeffs = [1]
    g = p.entries[0]
    for w in p.entries[1:]:
        g, x, y = xgcd(g, w)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
    if g != 1:  # unreachable for a validated Weights; kept as a guard
        raise CoprimeViolation(f"gcd is {g}, not 1")
    return tuple(coeffs)


def _ceildiv(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


def solve_degree(p: Weights, t: int) -> Vector:
    """A vector a with a.p = t, a_1 <= 0 and a_i >= 0 for i >= 2.

    Starts from t times a gcd chain and adds the minimal k >= 0 multiples of
    (-(p_2+...+p_n), p_1, ..., p_1) needed to reach the sign pattern.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if p.n < 2:
        raise ValueError("solve_degree needs at least two weights")
    base = gcd_chain(p)
    a = [t * c for c in base]
    p1 = p.entries[0]
    s = sum(p.entries[1:])
    k = max(0, _ceildiv(a[0], s), max(_ceildiv(-ai, p1) for ai in a[1:]))
    out = (a[0] - k * s,) + tuple(ai + k * p1 for ai in a[1:])
    if out[0] > 0 or any(x < 0 for x in out[1:]) or pdegree(out, p) != t:
        raise AssertionError("solve_degree postcondition failed")
    return out


def kernel_basis(p: Weights) -> tuple[Vector, ...]:
    """n-1 rows spanning the full integer kernel lattice {v : v.p = 0}.

    Row operations with unimodular 2x2 blocks reduce the column p to
    (1, 0, ..., 0); the rows below the first then form a basis of the whole
    kernel, not just a finite-index sublattice.
    """
    n = p.n
    if n == 1:
        return ()
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    d = list(p.entries)
    for i in range(1, n):
        g, x, y = xgcd(d[0], d[i])
        q0, qi = d[0] // g, d[i] // g
        r0 = [x * a + y * b for a, b in zip(u[0], u[i])]
        ri = [-qi * a + q0 * b for a, b in zip(u[0], u[i])]
        u[0], u[i] = r0, ri
        d[0], d[i] = g, 0
    rows = tuple(tuple(row) for row in u[1:])
    for r in rows:
        if pdegree(r, p) != 0:
            raise AssertionError("kernel basis row has nonzero weighted degree")
    return rows


def rational_rank(rows) -> int:
    """Rank over the rationals of a list of integer rows (exact)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _gram_schmidt(rows: list[list[int]]):
    """Exact Gram-Schmidt data: (mu, norm2, star) over Fractions."""
    m = len(rows)
    mu = [[Fraction(0)] * m for _ in range(m)]
    norm2: list[Fraction] = []
    star: list[list[Fraction]] = []
    for i in range(m):
        b = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(rows[i], star[j])) / norm2[j]
            b = [a - mu[i][j] * c for a, c in zip(b, star[j])]
        star.append(b)
        n2 = sum(x * x for x in b)
        if n2 == 0:
            raise ValueError("basis rows are linearly dependent")
        norm2.append(n2)
    return mu, norm2


def lll_reduce(basis, delta: Fraction = Fraction(99, 100)) -> tuple[Vector, ...]:
    """LLL reduction with exact rational Gram-Schmidt (no floating point).

    Returns rows spanning the same lattice, size-reduced and satisfying the
    Lovasz condition with the given delta.  Correctness of callers never
    depends on this step; it only shrinks entries.
    """
    rows = [list(r) for r in basis]
    m = len(rows)
    if m == 0:
        return ()
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ValueError("basis rows must all have the same dimension")
    if m == 1:
        return (tuple(rows[0]),)
    mu, norm2 = _gram_schmidt(rows)
    k = 1
    while k < m:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[j])]
                mu, norm2 = _gram_schmidt(rows)
        if norm2[k] >= (delta - mu[k][k - 1] ** 2) * norm2[k - 1]:
            k += 1
        else:
            rows[k - 1], rows[k] = rows[k], rows[k - 1]
            mu, norm2 = _gram_schmidt(rows)
            k = k - 1 if k > 1 else 1
    return tuple(tuple(r) for r in rows)


def representable_window(p: Weights) -> tuple[Vector, Vector]:
    """(u, v) with v.p = 1 and u + i*v >= 0 for i = 0..p_1-1.

    The p_1 vectors u + i*v witness p_1 consecutive representable weighted
    degrees starting at u.p.  The shift p_1 * |min v_i| is applied only when
    some entry of v is negative.
    """
    v = gcd_chain(p)
    m = min(v)
    shift = p.entries[0] * (-m if m < 0 else 0)
    u = tuple(x + shift for x in v)
    p1 = p.entries[0]
    for i in (0, p1 - 1):
        if any(a + i * b < 0 for a, b in zip(u, v)):
            raise AssertionError("representable window left the nonnegative orthant")
    return u, v
