"""Projective and affine collineations, plus pole-form quadratic conjugations.

A ProjMap is an invertible 3x3 matrix up to scale.  It acts on points by
``p -> M p``, on lines by ``l -> M^{-T} l`` and on conics by
``C -> M^{-T} C M^{-1}``; because matrices are projective, the inverse is the
integer adjugate and every action stays in exact integer arithmetic.

Quadratic conjugations (isotomic-style involutions determined by a pole) are
kept apart from collineations: they are Cremona maps, undefined on the side
lines, and compose with collineations only pointwise.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    CollinearInput,
    DegeneratePosition,
    DirectionOnAxis,
    InfiniteArgument,
    InfiniteInput,
    NonIsolatedFixedPoints,
    NotADirection,
    NotAffine,
    OnSideLine,
    SingularMatrix,
    TranslationNoFixedPoint,
)
from .projective import LINE_AT_INFINITY, ProjLine, ProjPoint, collinear


class ProjMap:
    """Invertible projective collineation as a canonical integer matrix."""

    __slots__ = ("matrix",)

    def __init__(self, rows):
        m = linalg.canonical_matrix(rows)
        if linalg.det3(m) == 0:
            raise SingularMatrix("projective map must be invertible")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMap is immutable")

    def __eq__(self, other):
        return isinstance(other, ProjMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(("ProjMap", self.matrix))

    def __repr__(self):
        return f"ProjMap{self.matrix}"

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint.of(linalg.matvec(self.matrix, p.coords))

    def apply_line(self, l: ProjLine) -> ProjLine:
        adj_t = linalg.transpose(linalg.adjugate(self.matrix))
        return ProjLine.of(linalg.matvec(adj_t, l.coords))

    def inverse(self) -> "ProjMap":
        return ProjMap(linalg.adjugate(self.matrix))

    def __matmul__(self, other: "ProjMap") -> "ProjMap":
        """Composition self after other."""
        return ProjMap(linalg.matmul(self.matrix, other.matrix))

    @property
    def is_affine(self) -> bool:
        """True iff the map fixes the line at infinity (setwise)."""
        sums = [sum(self.matrix[i][j] for i in range(3)) for j in range(3)]
        return sums[0] == sums[1] == sums[2]

    @property
    def is_identity(self) -> bool:
        m = self.matrix
        return (
            m[0][1] == m[0][2] == m[1][0] == m[1][2] == m[2][0] == m[2][1] == 0
            and m[0][0] == m[1][1] == m[2][2]
        )


IDENTITY = ProjMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def half_turn(center: ProjPoint) -> ProjMap:
    """Point reflection (homothety of ratio -1) about an ordinary center."""
    if center.is_infinite:
        raise InfiniteArgument("half-turn center must be ordinary")
    c = center.coords
    s = sum(c)
    return ProjMap(tuple(tuple(2 * c[i] - (s if i == j else 0) for j in range(3)) for i in range(3)))


def affine_from_triangles(src, dst) -> ProjMap:
    """Unique affine map sending the ordinary triangle src to dst, vertexwise."""
    for tri, err in ((src, "source"), (dst, "destination")):
        if len(tri) != 3:
            raise CollinearInput(f"{err} must have three vertices")
        if any(p.is_infinite for p in tri):
            raise InfiniteInput(f"{err} triangle has an infinite vertex")
        if collinear(tri):
            raise CollinearInput(f"{err} triangle is collinear")
    s_cols = tuple(zip(*(p.normalized() for p in src)))
    d_cols = tuple(zip(*(p.normalized() for p in dst)))
    return ProjMap(linalg.matmul(d_cols, linalg.adjugate(s_cols)))


def _frame_matrix(quad) -> tuple:
    """Matrix sending the standard frame to the quadruple, up to scale."""
    cols = tuple(zip(*(p.coords for p in quad[:3])))
    lam = linalg.matvec(linalg.adjugate(cols), quad[3].coords)
    if not all(lam):
        raise DegeneratePosition("fourth point lies on a side of the first three")
    return tuple(tuple(cols[i][j] * lam[j] for j in range(3)) for i in range(3))


def map_from_four_points(src, dst) -> ProjMap:
    """Unique collineation with src_i -> dst_i for quadruples in general position."""
    for quad in (src, dst):
        if len(quad) != 4:
            raise DegeneratePosition("need exactly four points")
        for skip in range(4):
            triple = [quad[i] for i in range(4) if i != skip]
            if collinear(triple):
                raise DegeneratePosition("three of the four points are collinear")
    ms = _frame_matrix(src)
    md = _frame_matrix(dst)
    return ProjMap(linalg.matmul(md, linalg.adjugate(ms)))


def affine_reflection(axis: ProjLine, direction: ProjPoint) -> ProjMap:
    """Affine reflection fixing `axis` pointwise, moving points parallel to
    `direction`; each segment from p to its image has its midpoint on the axis.
    """
    if not direction.is_infinite:
        raise NotADirection("reflection direction must be at infinity")
    s = linalg.dot(axis.coords, direction.coords)
    if s == 0:
        raise DirectionOnAxis("direction lies on the reflection axis")
    d, a = direction.coords, axis.coords
    return ProjMap(tuple(tuple((s if i == j else 0) - 2 * d[i] * a[j] for j in range(3)) for i in range(3)))


def fixed_point(m: ProjMap) -> ProjPoint:
    """Isolated ordinary fixed point of an affine map.

    Eigenvalue analysis over Q: for an affine matrix with equal column sums s,
    the fixed locus is the nullspace of (M - sI).
    """
    if not m.is_affine:
        raise NotAffine("fixed_point requires an affine map")
    s = sum(m.matrix[i][0] for i in range(3))
    shifted = tuple(
        tuple(m.matrix[i][j] - (s if i == j else 0) for j in range(3)) for i in range(3)
    )
    basis = linalg.nullspace(shifted)
    if len(basis) >= 3:
        raise NonIsolatedFixedPoints("identity map fixes everything")
    if len(basis) == 2:
        if all(sum(v) == 0 for v in basis):
            raise TranslationNoFixedPoint("map fixes the line at infinity pointwise only")
        raise NonIsolatedFixedPoints("map fixes a line pointwise")
    vec = basis[0]
    if sum(vec) == 0:
        raise TranslationNoFixedPoint("only fixed point is at infinity")
    return ProjPoint.of(vec)


def reciprocal_conjugate(pole: ProjPoint, x: ProjPoint) -> ProjPoint:
    """Pole-form quadratic involution (r : s : t) -> (l/r : m/s : n/t).

    With pole (1:1:1) this is the isotomic map; applying it twice returns x.
    """
    if not all(pole.coords):
        raise OnSideLine("conjugation pole must have nonzero coordinates")
    if not all(x.coords):
        raise OnSideLine(f"{x} lies on a side line")
    l, m, n = pole.coords
    r, s, t = x.coords
    return ProjPoint(l * s * t, m * t * r, n * r * s)


class QuadMap:
    """Reciprocal conjugation determined by its pole.

    An involution off the side lines; houses the isotomic map and the
    isogonal-style conjugations used throughout the construction graph.
    """

    __slots__ = ("pole",)

    def __init__(self, pole: ProjPoint):
        if not all(pole.coords):
            raise OnSideLine("pole must have all nonzero coordinates")
        object.__setattr__(self, "pole", pole)

    def __setattr__(self, name, value):
        raise AttributeError("QuadMap is immutable")

    def __call__(self, x: ProjPoint) -> ProjPoint:
        return reciprocal_conjugate(self.pole, x)

    def __repr__(self):
        return f"QuadMap(pole={self.pole})"


ISOTOMIC = QuadMap(ProjPoint(1, 1, 1))
