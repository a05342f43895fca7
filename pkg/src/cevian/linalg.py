"""Exact linear algebra on small integer/rational vectors and matrices.

All projective data in this package is stored as canonical integer tuples:
scaled to coprime integers with the first nonzero entry positive.  Two
homogeneous vectors are projectively equal iff their canonical forms are
equal, which makes every geometric comparison a tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ZeroVector

Vec = tuple
Mat3 = tuple


def canonical(values: Sequence) -> tuple:
    """Scale a rational vector to coprime ints, first nonzero entry positive."""
    fracs = [Fraction(v) for v in values]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ZeroVector("all coordinates are zero")
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def canonical_matrix(rows: Sequence[Sequence]) -> Mat3:
    """Canonicalize a matrix up to scale (flattened rule of `canonical`)."""
    n = len(rows[0])
    flat = canonical([v for row in rows for v in row])
    return tuple(flat[i * n:(i + 1) * n] for i in range(len(rows)))


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def cross(a: Sequence, b: Sequence) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def matvec(m: Mat3, v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def matmul(a: Mat3, b: Mat3) -> Mat3:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Mat3) -> Mat3:
    return tuple(zip(*m))


def det3(m: Mat3):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def adjugate(m: Mat3) -> Mat3:
    """Adjugate of a 3x3 matrix; projectively this is the inverse."""

    def cof(i, j):
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        j1, j2 = (j + 1) % 3, (j + 2) % 3
        return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def nullspace(rows: Sequence[Sequence]) -> list:
    """Basis of the nullspace of an exact linear system.

    Rows may be ints or Fractions.  Returns canonical integer tuples, one per
    free variable of the reduced system, in deterministic order.
    """
    work = [[Fraction(v) for v in row] for row in rows if any(row)]
    width = len(rows[0]) if rows else 0
    pivots: list[tuple[int, list]] = []
    for col in range(width):
        pivot_row = None
        for row in work:
            if row[col] != 0:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        inv = 1 / pivot_row[col]
        pivot_row = [v * inv for v in pivot_row]
        for row in work:
            f = row[col]
            if f:
                for k in range(col, width):
                    row[k] -= f * pivot_row[k]
        pivots.append((col, pivot_row))
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(width):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * width
        vec[free] = Fraction(1)
        for col, row in reversed(pivots):
            vec[col] = -sum(row[k] * vec[k] for k in range(col + 1, width))
        basis.append(canonical(vec))
    return basis
