"""Derived-object graph of a triangle/point configuration.

From a reference triangle (given with exact Cartesian coordinates, which fix
the metric data) and a base point P, this module constructs every named
object of the theory: the isotomic conjugate P', the isotomcomplement Q, the
cevian triangles, the triangle maps T_P and T_P', the generalized orthocenter
H and circumcenter O, the inconic, the central circumconic, the cevian conic,
the pole-form and synthetic generalized conjugations, pedal triangles and
pedal conics, circumcevian and tangential triangles, and the
tangential/circumcevian perspector.

Internally everything is barycentric with respect to the triangle, so the
vertices are the reference simplex and the line at infinity is [1 : 1 : 1];
Cartesian input is converted on ingestion.  Every construction that a theorem
relies on revalidates its defining incidences and raises ConsistencyError
loudly instead of absorbing a failure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import conics as conics_mod
from .conics import Conic, LineInvolution, conic_through_five, induced_involution, second_intersection
from .errors import (
    CollinearInput,
    ConsistencyError,
    DegenerateTriangle,
    FixedPointInput,
    GuardViolation,
    InfiniteConjugate,
    InfinitePoint,
    NotOnCircumconic,
    NotPerspective,
    OnSideLine,
    TranslationNoFixedPoint,
    VertexInput,
)
from .maps import (
    ISOTOMIC,
    ProjMap,
    QuadMap,
    affine_from_triangles,
    affine_reflection,
    fixed_point,
)
from .projective import (
    CENTROID,
    LINE_AT_INFINITY,
    VERTEX_A,
    VERTEX_B,
    VERTEX_C,
    VERTICES,
    ProjLine,
    ProjPoint,
    direction_of,
    join,
    line_basis,
    meet,
    midpoint,
)

SIDE_LINES = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))  # BC, CA, AB

COMPLEMENT = ProjMap(((0, 1, 1), (1, 0, 1), (1, 1, 0)))
ANTICOMPLEMENT = COMPLEMENT.inverse()


class Triangle:
    """Ordered vertex triple; strict triangles must be non-collinear."""

    __slots__ = ("vertices",)

    def __init__(self, a: ProjPoint, b: ProjPoint, c: ProjPoint, strict: bool = True):
        if len({a, b, c}) != 3:
            raise DegenerateTriangle("triangle vertices must be distinct")
        if strict and _collinear3(a, b, c):
            raise DegenerateTriangle("triangle vertices are collinear")
        object.__setattr__(self, "vertices", (a, b, c))

    def __setattr__(self, name, value):
        raise AttributeError("Triangle is immutable")

    def __eq__(self, other):
        return isinstance(other, Triangle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(("Triangle", self.vertices))

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __repr__(self):
        return f"Triangle{self.vertices}"

    @property
    def is_degenerate(self) -> bool:
        return _collinear3(*self.vertices)

    def apply(self, m: ProjMap) -> "Triangle":
        return Triangle(*(m(v) for v in self.vertices))


def _collinear3(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    u, v, w = a.coords, b.coords, c.coords
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    ) == 0


REFERENCE_TRIANGLE = Triangle(*VERTICES)


def _signed_area2(p, q, r) -> Fraction:
    return (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])


def barycentric_from_cartesian(triangle, xy) -> ProjPoint:
    """Barycentric coordinates of a Cartesian point w.r.t. a Cartesian triangle."""
    a, b, c = triangle
    return ProjPoint(
        _signed_area2(xy, b, c), _signed_area2(a, xy, c), _signed_area2(a, b, xy)
    )


def cartesian_from_barycentric(triangle, p: ProjPoint):
    """Cartesian pair of an ordinary barycentric point; None at infinity."""
    if p.is_infinite:
        return None
    a, b, c = triangle
    alpha, beta, gamma = p.normalized()
    return (
        alpha * a[0] + beta * b[0] + gamma * c[0],
        alpha * a[1] + beta * b[1] + gamma * c[1],
    )


class CevianConfig:
    """A validated (triangle, P) instance with memoized derived objects.

    Immutable after construction; derived objects are computed lazily and at
    most once.  (The lazy cache is not lock-protected: precompute eagerly
    before sharing across threads.)
    """

    def __init__(self, triangle_cartesian, p: ProjPoint):
        tri = tuple((Fraction(x), Fraction(y)) for x, y in triangle_cartesian)
        if _signed_area2(*tri) == 0:
            raise CollinearInput("triangle vertices are collinear")
        if p in VERTICES:
            raise VertexInput("base point coincides with a vertex")
        self.triangle_cartesian = tri
        self.p = p
        x, y, z = p.coords
        self.p_on_side = x * y * z == 0
        self.p_on_anticomplementary_side = (y + z) * (z + x) * (x + y) == 0
        self.p_on_median = (y - z) * (z - x) * (x - y) == 0
        self.p_on_steiner_circumellipse = x * y + y * z + z * x == 0
        self.p_is_infinite = x + y + z == 0
        self.p_is_centroid = p == CENTROID

    # -- guard plumbing -------------------------------------------------------

    def _need_base(self):
        if self.p_on_side:
            raise GuardViolation("on_side")
        if self.p_on_anticomplementary_side:
            raise GuardViolation("on_anticomplementary_side")

    @property
    def h_is_vertex(self) -> bool:
        return self.h in VERTICES

    @property
    def m_is_translation(self) -> bool:
        try:
            self.center_s
        except GuardViolation:
            return True
        return False

    @property
    def s_map_is_translation(self) -> bool:
        try:
            self.center_x
        except GuardViolation:
            return True
        return False

    def guard_flags(self) -> dict:
        """Exact predicate values of the configuration's named guards."""
        flags = {
            "on_side": self.p_on_side,
            "on_anticomplementary_side": self.p_on_anticomplementary_side,
            "on_median": self.p_on_median,
            "on_steiner_circumellipse": self.p_on_steiner_circumellipse,
            "p_is_infinite": self.p_is_infinite,
            "p_equals_centroid": self.p_is_centroid,
        }
        try:
            flags["h_is_vertex"] = self.h_is_vertex
        except GuardViolation:
            flags["h_is_vertex"] = None
        return flags

    # -- coordinate frame -----------------------------------------------------

    @cached_property
    def side_lengths_squared(self) -> tuple:
        (ax, ay), (bx, by), (cx, cy) = self.triangle_cartesian
        a2 = (bx - cx) ** 2 + (by - cy) ** 2
        b2 = (cx - ax) ** 2 + (cy - ay) ** 2
        c2 = (ax - bx) ** 2 + (ay - by) ** 2
        return a2, b2, c2

    def to_cartesian(self, p: ProjPoint):
        return cartesian_from_barycentric(self.triangle_cartesian, p)

    def from_cartesian(self, x, y) -> ProjPoint:
        return barycentric_from_cartesian(self.triangle_cartesian, (Fraction(x), Fraction(y)))

    # -- first-level objects ----------------------------------------------------

    @property
    def side_lines(self):
        return SIDE_LINES

    @cached_property
    def p_prime(self) -> ProjPoint:
        """Isotomic conjugate of the base point."""
        if self.p_on_side:
            raise GuardViolation("on_side")
        return ISOTOMIC(self.p)

    @cached_property
    def q(self) -> ProjPoint:
        """Isotomcomplement: complement of the isotomic conjugate."""
        return COMPLEMENT(self.p_prime)

    @cached_property
    def q_prime(self) -> ProjPoint:
        return COMPLEMENT(self.p)

    @cached_property
    def q_squared(self) -> ProjPoint:
        """Pole of the generalized conjugation: coordinatewise square of Q."""
        self._need_base()
        u, v, w = self.q.coords
        return ProjPoint(u * u, v * v, w * w)

    def _cevian_triangle_of(self, r: ProjPoint) -> Triangle:
        x, y, z = r.coords
        return Triangle(ProjPoint(0, y, z), ProjPoint(x, 0, z), ProjPoint(x, y, 0))

    @cached_property
    def cevian_triangle(self) -> Triangle:
        if self.p_on_side:
            raise GuardViolation("on_side")
        return self._cevian_triangle_of(self.p)

    @cached_property
    def conjugate_cevian_triangle(self) -> Triangle:
        return self._cevian_triangle_of(self.p_prime)

    @cached_property
    def medial_triangle(self) -> Triangle:
        return Triangle(ProjPoint(0, 1, 1), ProjPoint(1, 0, 1), ProjPoint(1, 1, 0))

    # -- triangle maps -----------------------------------------------------------

    @cached_property
    def t_p(self) -> ProjMap:
        """Affine map taking the reference triangle to the cevian triangle of P."""
        self._need_base()
        return affine_from_triangles(VERTICES, self.cevian_triangle.vertices)

    @cached_property
    def t_p_prime(self) -> ProjMap:
        self._need_base()
        return affine_from_triangles(VERTICES, self.conjugate_cevian_triangle.vertices)

    @cached_property
    def map_m(self) -> ProjMap:
        """Homothety-or-translation taking the circumconic to the inconic."""
        return self.t_p @ ANTICOMPLEMENT @ self.t_p_prime

    @cached_property
    def map_s(self) -> ProjMap:
        return self.t_p @ self.t_p_prime

    @cached_property
    def map_s_prime(self) -> ProjMap:
        return self.t_p_prime @ self.t_p

    @cached_property
    def center_s(self) -> ProjPoint:
        """Ordinary fixed point S of map_m."""
        try:
            return fixed_point(self.map_m)
        except TranslationNoFixedPoint as exc:
            raise GuardViolation("m_is_translation", str(exc)) from exc

    @cached_property
    def center_x(self) -> ProjPoint:
        try:
            return fixed_point(self.map_s)
        except TranslationNoFixedPoint as exc:
            raise GuardViolation("s_map_is_translation", str(exc)) from exc

    @cached_property
    def center_x_prime(self) -> ProjPoint:
        try:
            return fixed_point(self.map_s_prime)
        except TranslationNoFixedPoint as exc:
            raise GuardViolation("s_map_is_translation", str(exc)) from exc

    @cached_property
    def anticevian_triangle(self) -> Triangle:
        """Anticevian triangle of Q: preimage of the reference triangle under t_p_prime."""
        inv = self.t_p_prime.inverse()
        tri = Triangle(*(inv(v) for v in VERTICES))
        u, v, w = self.q.coords
        expected = (ProjPoint(-u, v, w), ProjPoint(u, -v, w), ProjPoint(u, v, -w))
        if tri.vertices != expected:
            raise ConsistencyError("anticevian triangle mismatch")
        return tri

    # -- reflections and the generalized conjugation ------------------------------

    @cached_property
    def reflections(self) -> tuple:
        """Affine reflections about AQ, BQ, CQ in the directions of the
        opposite cevian-triangle sides."""
        self._need_base()
        d, e, f = self.cevian_triangle.vertices
        dirs = (direction_of(join(e, f)), direction_of(join(d, f)), direction_of(join(d, e)))
        return tuple(
            affine_reflection(join(v, self.q), direction)
            for v, direction in zip(VERTICES, dirs)
        )

    @cached_property
    def drop_directions(self) -> tuple:
        """Directions of QD, QE, QF used for generalized pedal feet."""
        self._need_base()
        if self.p_on_steiner_circumellipse:
            raise GuardViolation("on_steiner_circumellipse")
        dirs = tuple(
            direction_of(join(self.q, t)) for t in self.cevian_triangle.vertices
        )
        if len(set(dirs)) != 3:
            raise ConsistencyError("pedal drop directions are not pairwise distinct")
        return dirs

    @cached_property
    def h(self) -> ProjPoint:
        """Generalized orthocenter: common point of the vertex parallels to
        QD, QE, QF."""
        self._need_base()
        lines = [
            join(v, direction_of(join(self.q, t)))
            for v, t in zip(VERTICES, self.cevian_triangle.vertices)
        ]
        return _common_point(lines, "generalized orthocenter")

    @cached_property
    def o(self) -> ProjPoint:
        """Generalized circumcenter K(H); cross-checked against the affine formula."""
        o1 = COMPLEMENT(self.h)
        o2 = self.t_p_prime.inverse()(COMPLEMENT(self.q))
        if o1 != o2:
            raise ConsistencyError("the two circumcenter constructions disagree")
        return o1

    # -- conics ---------------------------------------------------------------------

    @cached_property
    def inconic(self) -> Conic:
        """Conic tangent to the sides at the cevian traces of P; center Q."""
        return conics_mod.inconic(self)

    @cached_property
    def circumconic(self) -> Conic:
        """Central circumconic: image of the nine-point conic of (A, B, C, P')
        under the inverse of t_p_prime; its center is O."""
        self._need_base()
        if self.p_on_steiner_circumellipse:
            raise GuardViolation("on_steiner_circumellipse")
        nine = conics_mod.nine_point_conic(VERTEX_A, VERTEX_B, VERTEX_C, self.p_prime)
        conic = nine.transformed(self.t_p_prime.inverse())
        if not all(conic.contains(v) for v in VERTICES):
            raise ConsistencyError("circumconic misses a vertex")
        if conic.center() != self.o:
            raise ConsistencyError("circumconic center differs from O")
        return conic

    @cached_property
    def cevian_conic(self) -> Conic:
        """Conic through the vertices, P and Q."""
        self._need_base()
        if self.p_on_median:
            raise GuardViolation("on_median")
        return conic_through_five([VERTEX_A, VERTEX_B, VERTEX_C, self.p, self.q])

    @cached_property
    def psi(self) -> LineInvolution:
        """Conjugate-direction involution of the inconic on the line at infinity."""
        if self.p_on_steiner_circumellipse:
            raise GuardViolation("on_steiner_circumellipse")
        return induced_involution(self.inconic, LINE_AT_INFINITY)

    # -- metric objects ----------------------------------------------------------------

    @cached_property
    def classical_isogonal(self) -> QuadMap:
        """Isogonal conjugation of the Cartesian triangle (pole a^2 : b^2 : c^2)."""
        return QuadMap(ProjPoint(*self.side_lengths_squared))

    @cached_property
    def circumcircle(self) -> Conic:
        a2, b2, c2 = self.side_lengths_squared
        conic = Conic(((0, c2, b2), (c2, 0, a2), (b2, a2, 0)))
        if not all(conic.contains(v) for v in VERTICES):
            raise ConsistencyError("circumcircle misses a vertex")
        return conic

    # -- conjugation fast path ------------------------------------------------------

    def gamma(self, x: ProjPoint) -> ProjPoint:
        """Generalized conjugate of x via the pole formula, with the side-line
        closure (side points map to the opposite vertex)."""
        zeros = [i for i, c in enumerate(x.coords) if c == 0]
        if len(zeros) >= 2:
            raise VertexInput("conjugation undefined at a vertex")
        if zeros:
            return VERTICES[zeros[0]]
        return QuadMap(self.q_squared)(x)

    @cached_property
    def _delta_involutions(self) -> tuple:
        self._need_base()
        return _trace_involutions(self, self.t_p)

    def with_perturbed_h(self, dx, dy) -> "CevianConfig":
        """Copy whose memoized H is displaced by an exact Cartesian offset.

        Deliberate falsification hook: downstream objects derived from H in
        the copy are consistent with the perturbed H, so identities relating
        H to independently constructed objects must fail.
        """
        h_cart = self.to_cartesian(self.h)
        if h_cart is None:
            raise InfinitePoint("cannot perturb an infinite orthocenter")
        moved = self.from_cartesian(h_cart[0] + Fraction(dx), h_cart[1] + Fraction(dy))
        twin = CevianConfig(self.triangle_cartesian, self.p)
        twin.__dict__["h"] = moved
        return twin


def derive(triangle_cartesian, p) -> CevianConfig:
    """Build a configuration from Cartesian triangle vertices and a base point.

    ``p`` is a barycentric ProjPoint or a Cartesian rational pair.
    """
    if not isinstance(p, ProjPoint):
        tri = tuple((Fraction(x), Fraction(y)) for x, y in triangle_cartesian)
        p = barycentric_from_cartesian(tri, (Fraction(p[0]), Fraction(p[1])))
    return CevianConfig(triangle_cartesian, p)


def _common_point(lines: Sequence[ProjLine], what: str) -> ProjPoint:
    base = lines[0]
    other = next((l for l in lines[1:] if l != base), None)
    if other is None:
        raise ConsistencyError(f"{what}: defining lines coincide")
    point = meet(base, other)
    if not all(l.contains(point) for l in lines):
        raise ConsistencyError(f"{what}: defining lines are not concurrent")
    return point


# -- the generalized conjugation, synthetic and pole forms ------------------------


def gamma_P(cfg: CevianConfig, x: ProjPoint) -> ProjPoint:
    """Common point of the three vertex lines through the reflected images of x.

    The three lines are proved concurrent; concurrency is asserted exactly.
    Points of a side line (other than vertices) land on the opposite vertex.
    """
    if x in VERTICES:
        raise VertexInput("conjugation undefined at a vertex")
    lines = [join(v, refl(x)) for v, refl in zip(VERTICES, cfg.reflections)]
    return _common_point(lines, "generalized conjugate")


def gamma_P_pole(cfg: CevianConfig, x: ProjPoint) -> ProjPoint:
    """Pole-form evaluation of the generalized conjugation (pole Q^2)."""
    if not all(x.coords):
        raise OnSideLine(f"{x} lies on a side line")
    return QuadMap(cfg.q_squared)(x)


def _trace_involutions(cfg: CevianConfig, t_map: ProjMap) -> tuple:
    """Per-side involutions D* -> (vertex join image of t_map(D*)) meet side."""
    return tuple(
        LineInvolution.from_point_map(side, lambda s, v=v, side=side: meet(join(v, t_map(s)), side))
        for v, side in zip(VERTICES, SIDE_LINES)
    )


def _delta_via(cfg: CevianConfig, involutions, x: ProjPoint) -> ProjPoint:
    if x in VERTICES:
        raise VertexInput("conjugation undefined at a vertex")
    lines = []
    for v, side, invol in zip(VERTICES, SIDE_LINES, involutions):
        trace = meet(join(v, x), side)
        lines.append(join(v, invol.apply(trace)))
    return _common_point(lines, "trace conjugate")


def delta_P(cfg: CevianConfig, x: ProjPoint) -> ProjPoint:
    """Involutive trace conjugation built from t_p; sends P to the complement
    of P."""
    cfg._need_base()
    return _delta_via(cfg, cfg._delta_involutions, x)


def delta_of_point(cfg: CevianConfig, base: ProjPoint, x: ProjPoint) -> ProjPoint:
    """Trace conjugation for an arbitrary base point with valid cevian map."""
    t_map = affine_from_triangles(VERTICES, cfg._cevian_triangle_of(base).vertices)
    return _delta_via(cfg, _trace_involutions(cfg, t_map), x)


# -- pedal objects -----------------------------------------------------------------


def pedal_feet(cfg: CevianConfig, r: ProjPoint) -> tuple:
    """Feet on the sides of the parallels through r to QD, QE, QF.

    The feet are collinear exactly when r lies on the central circumconic.
    """
    if r.is_infinite:
        raise InfinitePoint("pedal feet of an infinite point")
    dirs = cfg.drop_directions
    return tuple(
        meet(join(r, d), side) for d, side in zip(dirs, SIDE_LINES)
    )


def pedal_triangle(cfg: CevianConfig, r: ProjPoint) -> Triangle:
    """Pedal triangle of r (vertices may be collinear on the circumconic)."""
    return Triangle(*pedal_feet(cfg, r), strict=False)


def pedal_conic(cfg: CevianConfig, r1: ProjPoint) -> Conic:
    """Common conic of the pedal triangles of r1 and its conjugate."""
    r2 = cfg.gamma(r1)
    if r2 == r1:
        raise FixedPointInput(f"{r1} is a fixed point of the conjugation")
    if r2.is_infinite:
        raise InfiniteConjugate(f"{r1} lies on the central circumconic")
    feet = pedal_feet(cfg, r1) + pedal_feet(cfg, r2)
    distinct = []
    for f in feet:
        if f not in distinct:
            distinct.append(f)
    if len(distinct) < 5:
        raise FixedPointInput("pedal feet collapse; conic underdetermined")
    conic = conic_through_five(distinct[:5])
    for f in distinct[5:]:
        if not conic.contains(f):
            raise ConsistencyError("sixth pedal foot is off the pedal conic")
    return conic


def simson_line(cfg: CevianConfig, r1: ProjPoint) -> ProjLine:
    """Line of the collinear pedal feet of a circumconic point."""
    if r1 in VERTICES:
        raise NotOnCircumconic("vertices have no transversal of feet")
    if not cfg.circumconic.contains(r1):
        raise NotOnCircumconic(f"{r1} is not on the central circumconic")
    feet = pedal_feet(cfg, r1)
    first = feet[0]
    second = next((f for f in feet[1:] if f != first), None)
    if second is None:
        raise ConsistencyError("pedal feet collapse to one point")
    line = join(first, second)
    if not all(line.contains(f) for f in feet):
        raise ConsistencyError("feet of a circumconic point are not collinear")
    return line


# -- circumcevian / tangential machinery ---------------------------------------------


def circumcevian_triangle(conic: Conic, base: Triangle, r: ProjPoint) -> Triangle:
    """Second intersections of the vertex cevians of r with a circumscribed conic."""
    out = []
    for v in base:
        if v == r:
            raise VertexInput("circumcevian point coincides with a vertex")
        out.append(second_intersection(conic, join(v, r), v))
    return Triangle(*out)


def tangential_triangle(conic: Conic, base: Triangle) -> Triangle:
    """Triangle bounded by the tangents at the base vertices (vertices may be
    infinite when two base points are antipodal)."""
    tangents = [conic.tangent_at(v) for v in base]
    return Triangle(
        meet(tangents[1], tangents[2]),
        meet(tangents[2], tangents[0]),
        meet(tangents[0], tangents[1]),
    )


def perspector(t1: Triangle, t2: Triangle) -> ProjPoint:
    """Common point of the three vertex cross-joins; concurrency is exact."""
    joins = []
    for v1, v2 in zip(t1, t2):
        if v1 == v2:
            raise NotPerspective("corresponding vertices coincide")
        joins.append(join(v1, v2))
    base = joins[0]
    other = next((l for l in joins[1:] if l != base), None)
    if other is None:
        raise NotPerspective("cross-joins coincide; perspector not unique")
    point = meet(base, other)
    if not all(l.contains(point) for l in joins):
        raise NotPerspective("cross-joins are not concurrent")
    return point


def is_perspective_from(t1: Triangle, t2: Triangle, center: ProjPoint) -> bool:
    """Perspectivity test from a known center; coincident pairs are vacuous."""
    for v1, v2 in zip(t1, t2):
        if v1 == v2:
            continue
        if not join(v1, v2).contains(center):
            return False
    return True


def tcc_perspector_of(cfg: CevianConfig, w: ProjPoint) -> ProjPoint:
    """Closed-formula tangential/circumcevian perspector of a point w.r.t. the
    circumcircle: gamma(anticomplement(T_R^{-1}(complement(gamma(w))))) with
    R the anticomplement of gamma(w)."""
    gamma = cfg.classical_isogonal
    gw = gamma(w)
    r = ANTICOMPLEMENT(gw)
    x, y, z = r.coords
    if x * y * z == 0 or (y + z) * (z + x) * (x + y) == 0:
        raise GuardViolation("tcc_formula_degenerate")
    t_r = affine_from_triangles(VERTICES, cfg._cevian_triangle_of(r).vertices)
    return gamma(ANTICOMPLEMENT(t_r.inverse()(COMPLEMENT(gw))))


def tcc_perspector(cfg: CevianConfig) -> ProjPoint:
    """Perspector of the tangential triangle and the circumcevian triangle of
    the isogonal conjugate of Q, w.r.t. the circumcircle.

    Computed three ways (closed formula, explicit perspector, isogonal image
    of the generalized orthocenter) and asserted equal.
    """
    cfg._need_base()
    if cfg.p_is_infinite:
        raise GuardViolation("p_is_infinite")
    if cfg.p_on_steiner_circumellipse:
        raise GuardViolation("on_steiner_circumellipse")
    if cfg.h_is_vertex:
        raise GuardViolation("h_is_vertex")
    gamma = cfg.classical_isogonal
    circle = cfg.circumcircle
    gq = gamma(cfg.q)
    by_formula = tcc_perspector_of(cfg, gq)
    by_perspector = perspector(
        tangential_triangle(circle, REFERENCE_TRIANGLE),
        circumcevian_triangle(circle, REFERENCE_TRIANGLE, gq),
    )
    gh = gamma(cfg.h)
    if not (by_formula == by_perspector == gh):
        raise ConsistencyError("tangential/circumcevian perspector paths disagree")
    return gh
