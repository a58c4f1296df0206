"""Shared checks: exact lattice comparisons, reduction certificates, and
random instance generation.  Everything here is independent of the library
internals so it can act as a referee."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def integer_combination(rows, target):
    """Integer coefficients c with sum c_i * rows[i] = target, or None.

    Solves the linear system exactly over the rationals and rejects
    non-integer solutions; the result is verified before returning.
    """
    m = len(rows)
    if m == 0:
        return () if not any(target) else None
    n = len(rows[0])
    # one equation per coordinate, unknowns are the coefficients
    mat = [
        [Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])]
        for j in range(n)
    ]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((k for k in range(r, n) if mat[k][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for k in range(n):
            if k != r and mat[k][c]:
                f = mat[k][c] / mat[r][c]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append((r, c))
        r += 1
    for k in range(r, n):
        if mat[k][m]:
            return None
    coeffs = [Fraction(0)] * m
    for row, col in pivots:
        coeffs[col] = mat[row][m] / mat[row][col]
    if any(c.denominator != 1 for c in coeffs):
        return None
    out = tuple(int(c) for c in coeffs)
    if any(dot(out, [rows[i][j] for i in range(m)]) != target[j] for j in range(n)):
        return None
    return out


def same_lattice(rows_a, rows_b):
    """True iff the two row sets generate the same integer lattice."""
    return all(integer_combination(rows_b, r) is not None for r in rows_a) and all(
        integer_combination(rows_a, r) is not None for r in rows_b
    )


def _det(mat):
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    assert det.denominator == 1
    return int(det)


def maximal_minors_gcd(rows):
    """gcd of all maximal minors; 1 means the rows span a saturated lattice."""
    m = len(rows)
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), m):
        g = gcd(g, _det([[row[j] for j in cols] for row in rows]))
    return g


def check_lll(rows, delta=Fraction(99, 100)):
    """Recompute Gram-Schmidt data and assert size reduction plus the
    Lovasz condition; raises AssertionError with the offending indices."""
    m = len(rows)
    mu = [[Fraction(0)] * m for _ in range(m)]
    star = []
    norm2 = []
    for i in range(m):
        b = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(rows[i], star[j])) / norm2[j]
            b = [a - mu[i][j] * c for a, c in zip(b, star[j])]
        star.append(b)
        norm2.append(sum(x * x for x in b))
        assert norm2[i] > 0, f"row {i} is dependent on earlier rows"
    for i in range(m):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2), f"mu[{i}][{j}] = {mu[i][j]}"
    for k in range(1, m):
        lhs = norm2[k]
        rhs = (delta - mu[k][k - 1] ** 2) * norm2[k - 1]
        assert lhs >= rhs, f"Lovasz condition fails at k={k}"
    return True


def random_weights(rng, n_lo, n_hi, lo, hi):
    """A coprime tuple of rng-chosen length and entry range (resamples
    until the gcd is 1)."""
    while True:
        n = rng.randint(n_lo, n_hi)
        entries = tuple(rng.randint(lo, hi) for _ in range(n))
        g = 0
        for w in entries:
            g = gcd(g, w)
        if g == 1:
            return entries
