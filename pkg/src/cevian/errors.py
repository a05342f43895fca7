"""Exception hierarchy for the exact geometry kernel.

Every failure mode of a kernel operation has its own class so callers can
react precisely; all of them derive from :class:`GeometryError`.
"""


class GeometryError(Exception):
    """Base class for all geometric failures raised by this package."""


# -- projective primitives ---------------------------------------------------

class ZeroVector(GeometryError):
    """All homogeneous coordinates vanish."""


class EqualPoints(GeometryError):
    """Two points expected to be distinct coincide projectively."""


class EqualLines(GeometryError):
    """Two lines expected to be distinct coincide projectively."""


class NotCollinear(GeometryError):
    """Points required to lie on one line do not."""


class DegenerateQuadruple(GeometryError):
    """Cross-ratio of the four points is the indeterminate 0/0."""


class CoincidentArgument(GeometryError):
    """An argument coincides with a base point where that is not allowed."""


class InfiniteArgument(GeometryError):
    """An ordinary (finite) point was required."""


class InfinitePoint(InfiniteArgument):
    """Alias used by pedal constructions for an infinite input point."""


# -- collineations and conjugations ------------------------------------------

class SingularMatrix(GeometryError):
    """Matrix of a projective map has determinant zero."""


class NotAffine(GeometryError):
    """Operation requires a map fixing the line at infinity."""


class CollinearInput(GeometryError):
    """Input triangle vertices are collinear."""


class InfiniteInput(GeometryError):
    """Input triangle vertices must be ordinary."""


class DegeneratePosition(GeometryError):
    """Four-point quadruple is not in general position."""


class DirectionOnAxis(GeometryError):
    """Reflection direction lies on the reflection axis."""


class NotADirection(GeometryError):
    """Reflection direction must be a point at infinity."""


class TranslationNoFixedPoint(GeometryError):
    """Affine map has no ordinary fixed point."""


class NonIsolatedFixedPoints(GeometryError):
    """Affine map fixes a whole line (or the whole plane) pointwise."""


class OnSideLine(GeometryError):
    """Point lies on a side line where a conjugation is undefined."""


# -- conics --------------------------------------------------------------------

class UnderDetermined(GeometryError):
    """Conic fit admits more than one solution."""


class FourCollinear(GeometryError):
    """Four of the points to fit are collinear."""


class RankDeficient(GeometryError):
    """Linear conditions are rank deficient (solution not unique)."""


class Overconstrained(GeometryError):
    """Linear conditions admit no conic at all."""


class DegenerateConic(GeometryError):
    """Polarity-derived operation refused on a degenerate conic."""


class KnownNotIncident(GeometryError):
    """The claimed known point is not on the conic or line."""


class TangentLine(GeometryError):
    """Line is tangent to the conic; induced involution degenerates."""


class DifferentBaseLines(GeometryError):
    """Line involutions live on different base lines."""


class DegenerateQuadrangle(GeometryError):
    """Quadrangle for a nine-point conic is degenerate."""


class DegenerateInput(GeometryError):
    """Input configuration degenerate for the requested construction."""


# -- derived-object graph -------------------------------------------------------

class GuardViolation(GeometryError):
    """A hypothesis guard of the configuration fails.

    ``guard`` names the violated predicate.
    """

    def __init__(self, guard: str, message: str = ""):
        self.guard = guard
        super().__init__(message or f"guard violated: {guard}")


class VertexInput(GeometryError):
    """Operation undefined at a vertex of the reference triangle."""


class FixedPointInput(GeometryError):
    """Point is a fixed point of the conjugation; conjugate pair degenerate."""


class InfiniteConjugate(GeometryError):
    """Conjugate point is at infinity (input on the central circumconic)."""


class NotOnCircumconic(GeometryError):
    """Point required to lie on the central circumconic does not."""


class NotPerspective(GeometryError):
    """The two triangles are not perspective from a point."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear or coincide."""


class ConsistencyError(GeometryError):
    """An exact identity that must hold by construction failed.

    Raised instead of silently continuing: a broken invariant here means
    either a degenerate input slipped past the guards or a genuine defect.
    """


class RetryExhausted(GeometryError):
    """Rejection sampling failed to satisfy the requested guards."""
