"""Conics as symmetric matrices and the involutions they induce on lines.

A conic is a symmetric 3x3 matrix up to scale; incidence is p^T C p = 0,
the polar of p is the line C p, the center is the pole of the line at
infinity.  Fitting goes through exact nullspace computation on the six
coefficients (a11, a22, a33, a12, a13, a23), so every construction that the
theory needs stays rational: tangency conditions are linear (incidence plus
polar proportionality) and second intersections divide out the known root of
a quadratic instead of extracting one.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from . import linalg
from .errors import (
    ConsistencyError,
    DegenerateConic,
    DegenerateInput,
    DegenerateQuadrangle,
    DifferentBaseLines,
    FourCollinear,
    KnownNotIncident,
    Overconstrained,
    RankDeficient,
    TangentLine,
    UnderDetermined,
)
from .projective import (
    LINE_AT_INFINITY,
    VERTICES,
    ProjLine,
    ProjPoint,
    collinear,
    combine,
    join,
    line_basis,
    line_coordinates,
    meet,
    midpoint,
    reflect_through,
)


class Conic:
    """Symmetric 3x3 rational matrix up to scale."""

    __slots__ = ("matrix",)

    def __init__(self, rows):
        m = linalg.canonical_matrix(rows)
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
            raise DegenerateInput("conic matrix must be symmetric")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "Conic":
        """Assemble from (a11, a22, a33, a12, a13, a23)."""
        a11, a22, a33, a12, a13, a23 = coeffs
        return cls(((a11, a12, a13), (a12, a22, a23), (a13, a23, a33)))

    def __eq__(self, other):
        return isinstance(other, Conic) and self.matrix == other.matrix

    def __hash__(self):
        return hash(("Conic", self.matrix))

    def __repr__(self):
        return f"Conic{self.matrix}"

    @property
    def is_degenerate(self) -> bool:
        return linalg.det3(self.matrix) == 0

    def contains(self, p: ProjPoint) -> bool:
        v = p.coords
        return linalg.dot(v, linalg.matvec(self.matrix, v)) == 0

    def evaluate(self, p: ProjPoint, q: ProjPoint):
        """Bilinear form p^T C q (conjugacy test: zero iff p, q conjugate)."""
        return linalg.dot(p.coords, linalg.matvec(self.matrix, q.coords))

    def polar(self, p: ProjPoint) -> ProjLine:
        if self.is_degenerate:
            raise DegenerateConic("polar undefined on a degenerate conic")
        return ProjLine.of(linalg.matvec(self.matrix, p.coords))

    def pole(self, l: ProjLine) -> ProjPoint:
        if self.is_degenerate:
            raise DegenerateConic("pole undefined on a degenerate conic")
        return ProjPoint.of(linalg.matvec(linalg.adjugate(self.matrix), l.coords))

    def center(self) -> ProjPoint:
        """Pole of the line at infinity."""
        return self.pole(LINE_AT_INFINITY)

    def tangent_at(self, p: ProjPoint) -> ProjLine:
        if not self.contains(p):
            raise KnownNotIncident(f"{p} not on the conic")
        return self.polar(p)

    def is_tangent(self, l: ProjLine) -> bool:
        if self.is_degenerate:
            raise DegenerateConic("tangency test undefined on a degenerate conic")
        v = l.coords
        return linalg.dot(v, linalg.matvec(linalg.adjugate(self.matrix), v)) == 0

    def transformed(self, m) -> "Conic":
        """Image conic under a ProjMap: M^{-T} C M^{-1}."""
        inv = linalg.adjugate(m.matrix)
        return Conic(linalg.matmul(linalg.matmul(linalg.transpose(inv), self.matrix), inv))


# -- linear conditions on the six coefficients --------------------------------

def incidence_condition(p: ProjPoint) -> tuple:
    x, y, z = p.coords
    return (x * x, y * y, z * z, 2 * x * y, 2 * x * z, 2 * y * z)


def _polar_component(p: ProjPoint, i: int) -> tuple:
    x, y, z = p.coords
    if i == 0:
        return (x, 0, 0, y, z, 0)
    if i == 1:
        return (0, y, 0, x, 0, z)
    return (0, 0, z, 0, x, y)


def polar_conditions(p: ProjPoint, l: ProjLine) -> list:
    """Rows forcing polar(p) proportional to l (cross-eliminated, rank 2)."""
    rows = []
    for i in range(3):
        for j in range(i + 1, 3):
            ci = _polar_component(p, i)
            cj = _polar_component(p, j)
            rows.append(tuple(l.coords[j] * a - l.coords[i] * b for a, b in zip(ci, cj)))
    return rows


def tangency_conditions(point: ProjPoint, line: ProjLine) -> list:
    """Tangency to `line` at `point`: polar proportionality (incidence follows)."""
    return polar_conditions(point, line)


def center_conditions(center: ProjPoint) -> list:
    return polar_conditions(center, LINE_AT_INFINITY)


def conic_from_conditions(conditions: Iterable[Sequence]) -> Conic:
    """Conic from homogeneous linear constraints of rank exactly five."""
    rows = list(conditions)
    basis = linalg.nullspace(rows)
    if not basis:
        raise Overconstrained("conditions admit no conic")
    if len(basis) > 1:
        raise RankDeficient(f"conditions leave {len(basis)} degrees of freedom")
    return Conic.from_coefficients(basis[0])


def conic_through_five(points: Sequence[ProjPoint]) -> Conic:
    """Unique conic through five points, no four collinear."""
    pts = list(points)
    if len(pts) != 5 or len(set(pts)) != 5:
        raise DegenerateInput("need five distinct points")
    for skip in range(5):
        quad = [pts[i] for i in range(5) if i != skip]
        if collinear(quad):
            raise FourCollinear("four of the points are collinear")
    try:
        return conic_from_conditions([incidence_condition(p) for p in pts])
    except RankDeficient as exc:
        raise UnderDetermined(str(exc)) from exc


def second_intersection(c: Conic, l: ProjLine, known: ProjPoint) -> ProjPoint:
    """Second point of a conic on a line through a known conic point.

    The quadratic in the line parameter has the known root divided out
    exactly, so the result is always rational; a tangent line returns the
    known point itself.
    """
    if c.is_degenerate:
        raise DegenerateConic("second intersection on a degenerate conic")
    if not c.contains(known):
        raise KnownNotIncident(f"{known} not on the conic")
    if not l.contains(known):
        raise KnownNotIncident(f"{known} not on the line")
    b0, b1 = line_basis(l)
    other = b0 if b0 != known else b1
    # points: known + t * other;  residual root t = -b/a after dividing out t = 0
    a = c.evaluate(other, other)
    b = 2 * c.evaluate(known, other)
    if a == 0 and b == 0:
        raise DegenerateConic("line lies on the conic")
    if a == 0:
        return other
    if b == 0:
        return known
    return combine(a, known, -b, other)


class LineInvolution:
    """Projective involution on a fixed base line.

    Stored as a canonical 2x2 integer matrix in the deterministic parameter
    basis of the line, so involutions induced on the same line by different
    constructions compare by matrix proportionality.
    """

    __slots__ = ("base_line", "basis", "action")

    def __init__(self, base_line: ProjLine, action):
        flat = linalg.canonical([action[0][0], action[0][1], action[1][0], action[1][1]])
        m = (flat[0:2], flat[2:4])
        sq = (
            m[0][0] * m[0][0] + m[0][1] * m[1][0],
            m[0][0] * m[0][1] + m[0][1] * m[1][1],
            m[1][0] * m[0][0] + m[1][1] * m[1][0],
            m[1][0] * m[0][1] + m[1][1] * m[1][1],
        )
        if sq[1] != 0 or sq[2] != 0 or sq[0] != sq[3]:
            raise DegenerateInput("action is not an involution")
        if m[0][1] == 0 and m[1][0] == 0 and m[0][0] == m[1][1]:
            raise DegenerateInput("involution must not be the identity")
        object.__setattr__(self, "base_line", base_line)
        object.__setattr__(self, "basis", line_basis(base_line))
        object.__setattr__(self, "action", m)

    def __setattr__(self, name, value):
        raise AttributeError("LineInvolution is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LineInvolution)
            and self.base_line == other.base_line
            and self.action == other.action
        )

    def __hash__(self):
        return hash(("LineInvolution", self.base_line.coords, self.action))

    def __repr__(self):
        return f"LineInvolution({self.base_line}, {self.action})"

    @classmethod
    def from_point_map(cls, base_line: ProjLine, f: Callable[[ProjPoint], ProjPoint]) -> "LineInvolution":
        """Involution from a point map of the line (sampled on three points)."""
        b0, b1 = line_basis(base_line)
        bsum = combine(1, b0, 1, b1)
        c0 = line_coordinates(b0, b1, f(b0))
        c1 = line_coordinates(b0, b1, f(b1))
        cs = line_coordinates(b0, b1, f(bsum))
        # scale the two image columns so the unit point maps correctly
        a = cs[0] * c1[1] - cs[1] * c1[0]
        b = c0[0] * cs[1] - c0[1] * cs[0]
        action = ((a * c0[0], b * c1[0]), (a * c0[1], b * c1[1]))
        return cls(base_line, action)

    def apply(self, p: ProjPoint) -> ProjPoint:
        if not self.base_line.contains(p):
            raise KnownNotIncident(f"{p} not on {self.base_line}")
        s, t = line_coordinates(self.basis[0], self.basis[1], p)
        m = self.action
        return combine(m[0][0] * s + m[0][1] * t, self.basis[0], m[1][0] * s + m[1][1] * t, self.basis[1])


def induced_involution(c: Conic, l: ProjLine) -> LineInvolution:
    """Conjugate-point involution cut on l by the polarity of c."""
    if c.is_degenerate:
        raise DegenerateConic("polarity of a degenerate conic")
    if c.is_tangent(l):
        raise TangentLine("line is tangent to the conic")
    return LineInvolution.from_point_map(l, lambda p: meet(c.polar(p), l))


def involutions_equal(i1: LineInvolution, i2: LineInvolution) -> bool:
    if i1.base_line != i2.base_line:
        raise DifferentBaseLines("involutions on different lines are incomparable")
    return i1.action == i2.action


def nine_point_conic(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> Conic:
    """Conic through the six side midpoints and three diagonal points of a
    quadrangle of ordinary points in general position."""
    pts = [p1, p2, p3, p4]
    if len(set(pts)) != 4:
        raise DegenerateQuadrangle("quadrangle points must be distinct")
    if any(p.is_infinite for p in pts):
        raise DegenerateQuadrangle("quadrangle points must be ordinary")
    for skip in range(4):
        if collinear([pts[i] for i in range(4) if i != skip]):
            raise DegenerateQuadrangle("three of the four points are collinear")
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    mids = [midpoint(pts[i], pts[j]) for i, j in pairs]
    diagonals = [
        meet(join(p1, p2), join(p3, p4)),
        meet(join(p1, p3), join(p2, p4)),
        meet(join(p1, p4), join(p2, p3)),
    ]
    try:
        conic = conic_through_five(mids[:5])
    except (UnderDetermined, FourCollinear, DegenerateInput) as exc:
        raise DegenerateQuadrangle(str(exc)) from exc
    for extra in mids[5:] + diagonals:
        if not conic.contains(extra):
            raise ConsistencyError(f"nine-point conic misses {extra}")
    return conic


def circumconic_with_center(center: ProjPoint) -> Conic:
    """Conic through the reference vertices with the given ordinary center.

    Unique only when the center is off the side lines: for a center on a side
    (necessarily the midpoint) a whole pencil of central circumconics exists
    and the fit is refused.
    """
    if center.is_infinite:
        raise DegenerateInput("center must be ordinary")
    if not all(center.coords):
        raise DegenerateInput("center on a side line: circumconic not unique")
    rows = [incidence_condition(v) for v in VERTICES]
    rows += center_conditions(center)
    rows += [incidence_condition(reflect_through(center, v)) for v in VERTICES]
    conic = conic_from_conditions(rows)
    if conic.is_degenerate:
        raise DegenerateConic("no nondegenerate circumconic has this center")
    if conic.center() != center:
        raise ConsistencyError("fitted circumconic has the wrong center")
    return conic


def conic_with_involution_through(
    a: ProjPoint, b: ProjPoint, c: ProjPoint, psi: LineInvolution
) -> Conic:
    """Unique conic through three ordinary points inducing the involution psi
    on the line at infinity.

    The center is recovered as the meet of two diameters (each joining a side
    midpoint to the involution image of that side's direction).  If the center
    is collinear with two of the points it is their midpoint and the conic is
    pinned instead by the tangent lines at those two points.
    """
    if psi.base_line != LINE_AT_INFINITY:
        raise DegenerateInput("involution must live on the line at infinity")
    pts = (a, b, c)
    if collinear(pts) or any(p.is_infinite for p in pts):
        raise DegenerateInput("need three ordinary non-collinear points")
    mid_ab = midpoint(a, b)
    mid_ac = midpoint(a, c)
    dir_ab = meet(join(a, b), LINE_AT_INFINITY)
    dir_ac = meet(join(a, c), LINE_AT_INFINITY)
    center = meet(join(mid_ab, psi.apply(dir_ab)), join(mid_ac, psi.apply(dir_ac)))
    pair = None
    for u, v in ((a, b), (a, c), (b, c)):
        if join(u, v).contains(center):
            pair = (u, v)
    if pair is None:
        conic = conic_through_five([a, b, c, reflect_through(center, a), reflect_through(center, b)])
    else:
        u, v = pair
        w = next(p for p in pts if p not in pair)
        tangent_dir = psi.apply(meet(join(u, v), LINE_AT_INFINITY))
        rows = [incidence_condition(w)]
        rows += tangency_conditions(u, join(u, tangent_dir))
        rows += tangency_conditions(v, join(v, tangent_dir))
        conic = conic_from_conditions(rows)
    if conic.is_degenerate:
        raise DegenerateInput("involution does not come from a central conic")
    if not involutions_equal(induced_involution(conic, LINE_AT_INFINITY), psi):
        raise ConsistencyError("reconstructed conic induces a different involution")
    return conic


def inconic(cfg) -> Conic:
    """Conic tangent to the side lines at the cevian traces of the
    configuration's base point; its center is the isotomcomplement."""
    traces = cfg.cevian_triangle.vertices
    sides = cfg.side_lines
    rows = []
    for trace, side in zip(traces, sides):
        rows += tangency_conditions(trace, side)
    conic = conic_from_conditions(rows)
    if conic.polar(cfg.q) != LINE_AT_INFINITY:
        raise ConsistencyError("inconic center is not the isotomcomplement")
    return conic
