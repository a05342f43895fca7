"""Homogeneous-coordinate primitives over exact rationals.

Points and lines live in the projective plane over Q.  The affine chart is
fixed once and for all: the line at infinity is ``[1 : 1 : 1]``, so the
coordinates behave as barycentrics with respect to the reference triangle
``(1:0:0), (0:1:0), (0:0:1)``.  Ordinary points are those with nonzero
coordinate sum; they normalize to affine combinations summing to one.

No floating point appears anywhere: coordinates are arbitrary-precision
integers in canonical form and every predicate is decided exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import linalg
from .errors import (
    CoincidentArgument,
    DegenerateQuadruple,
    EqualLines,
    EqualPoints,
    InfiniteArgument,
    NotCollinear,
)


class _Infinity:
    """Distinguished infinite value of the extended rationals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

ExtRat = Union[Fraction, _Infinity]


class _HomogeneousTriple:
    """Shared storage/canonicalization for points and lines."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        object.__setattr__(self, "coords", linalg.canonical((x, y, z)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def of(cls, triple: Sequence):
        return cls(triple[0], triple[1], triple[2])

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))


class ProjPoint(_HomogeneousTriple):
    """Projective point, canonical integer homogeneous triple."""

    def __repr__(self):
        return "({} : {} : {})".format(*self.coords)

    @property
    def is_infinite(self) -> bool:
        return sum(self.coords) == 0

    def normalized(self) -> tuple:
        """Affine representative with coordinate sum 1."""
        s = sum(self.coords)
        if s == 0:
            raise InfiniteArgument(f"{self} is at infinity")
        return tuple(Fraction(c, s) for c in self.coords)


class ProjLine(_HomogeneousTriple):
    """Projective line in dual coordinates; p on l iff dot(p, l) = 0."""

    def __repr__(self):
        return "[{} : {} : {}]".format(*self.coords)

    def contains(self, p: ProjPoint) -> bool:
        return linalg.dot(self.coords, p.coords) == 0


LINE_AT_INFINITY = ProjLine(1, 1, 1)

VERTEX_A = ProjPoint(1, 0, 0)
VERTEX_B = ProjPoint(0, 1, 0)
VERTEX_C = ProjPoint(0, 0, 1)
VERTICES = (VERTEX_A, VERTEX_B, VERTEX_C)
CENTROID = ProjPoint(1, 1, 1)


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """Line through two distinct points."""
    if p == q:
        raise EqualPoints(f"join of equal points {p}")
    return ProjLine.of(linalg.cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """Common point of two distinct lines (dual of `join`)."""
    if l == m:
        raise EqualLines(f"meet of equal lines {l}")
    return ProjPoint.of(linalg.cross(l.coords, m.coords))


def combine(s, p: ProjPoint, t, q: ProjPoint) -> ProjPoint:
    """The point s*p + t*q on the line pq (coefficients on canonical forms)."""
    return ProjPoint.of(tuple(s * a + t * b for a, b in zip(p.coords, q.coords)))


def collinear(points: Iterable[ProjPoint]) -> bool:
    pts = list(points)
    base = pts[0]
    other = next((p for p in pts[1:] if p != base), None)
    if other is None:
        return True
    l = join(base, other).coords
    return all(linalg.dot(l, p.coords) == 0 for p in pts)


def direction_of(l: ProjLine) -> ProjPoint:
    """Point at infinity of an ordinary line."""
    if l == LINE_AT_INFINITY:
        raise EqualLines("the line at infinity has no single direction")
    return meet(l, LINE_AT_INFINITY)


def parallel_through(p: ProjPoint, l: ProjLine) -> ProjLine:
    """Line through p parallel to l."""
    d = direction_of(l)
    if p == d:
        raise CoincidentArgument("point is the direction of the line")
    return join(p, d)


def line_basis(l: ProjLine) -> tuple[ProjPoint, ProjPoint]:
    """Deterministic two-point parameter basis of a line.

    The two lexicographically smallest canonical points among the meets of l
    with the coordinate axes; shared by every consumer so that parametrized
    objects on the same line are directly comparable.
    """
    candidates = set()
    for unit in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = linalg.cross(l.coords, unit)
        if any(v):
            candidates.add(ProjPoint.of(v))
    b0, b1 = sorted(candidates, key=lambda p: p.coords)[:2]
    return b0, b1


def line_coordinates(b0: ProjPoint, b1: ProjPoint, p: ProjPoint) -> tuple:
    """Coordinates (s : t) of p in the basis (b0, b1) of its line."""
    u, v, w = b0.coords, b1.coords, p.coords
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            det = u[i] * v[j] - u[j] * v[i]
            if det != 0:
                s = w[i] * v[j] - w[j] * v[i]
                t = u[i] * w[j] - u[j] * w[i]
                if any(s * a + t * b - det * c for a, b, c in zip(u, v, w)):
                    raise NotCollinear(f"{p} not on span of {b0}, {b1}")
                return linalg.canonical((s, t)) if (s or t) else (0, 0)
    raise CoincidentArgument("degenerate line basis")


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> ExtRat:
    """Cross-ratio (a, b; c, d) of four collinear points.

    Projectively invariant; equals -1 exactly on harmonic quadruples.
    Returns INFINITY when the defining ratio is k/0 with k nonzero.
    """
    pts = [a, b, c, d]
    base = a
    other = next((p for p in pts if p != base), None)
    if other is None:
        raise DegenerateQuadruple("all four points coincide")
    l = join(base, other)
    if not all(l.contains(p) for p in pts):
        raise NotCollinear("cross-ratio of non-collinear points")
    b0, b1 = line_basis(l)
    ca, cb, cc, cd = (line_coordinates(b0, b1, p) for p in pts)

    def det2(u, v):
        return u[0] * v[1] - u[1] * v[0]

    num = det2(cc, ca) * det2(cd, cb)
    den = det2(cd, ca) * det2(cc, cb)
    if den != 0:
        return Fraction(num, den)
    if num != 0:
        return INFINITY
    raise DegenerateQuadruple("cross-ratio is 0/0")


def harmonic_conjugate(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> ProjPoint:
    """Fourth harmonic point d with (a, b; c, d) = -1.

    Involution in the third argument wherever defined.
    """
    if a == b:
        raise CoincidentArgument("base points coincide")
    if c in (a, b):
        raise CoincidentArgument("third point equals a base point")
    l = join(a, b)
    if not l.contains(c):
        raise NotCollinear(f"{c} not on line {a}{b}")
    s, t = line_coordinates(a, b, c)
    return combine(s, a, -t, b)


def midpoint(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Affine midpoint of two ordinary points; midpoint(p, p) = p."""
    pn = p.normalized()
    qn = q.normalized()
    return ProjPoint.of(tuple((x + y) / 2 for x, y in zip(pn, qn)))


def reflect_through(center: ProjPoint, p: ProjPoint) -> ProjPoint:
    """Image of an ordinary point under the half-turn about an ordinary center."""
    cn = center.normalized()
    pn = p.normalized()
    return ProjPoint.of(tuple(2 * x - y for x, y in zip(cn, pn)))
