"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for every arithmetic or geometric error raised here."""


class ZeroVector(GeometryError):
    """An operation that needs a nonzero vector received the zero vector."""


class ShapeMismatch(GeometryError):
    """Vector lengths, matrix widths or ambient ranks disagree."""


class DependentRows(GeometryError):
    """Rows expected to be linearly independent are not."""


class NotSaturated(GeometryError):
    """A basis supposed to span a saturated sublattice spans a finer one."""


class NotPointed(GeometryError):
    """The generated cone contains a line."""


class DuplicateRay(GeometryError):
    """Two declared rays generate the same half-line."""


class RedundantRay(GeometryError):
    """A declared ray is not an extreme ray of any declared cone."""


class IntersectionNotFace(GeometryError):
    """Two cones of a would-be fan intersect badly (fan axiom 3 fails)."""


class HypothesisViolated(GeometryError):
    """The skeleton does not split between the subspace and its complement."""


class NotComplete(GeometryError):
    """The operation is only defined for complete fans."""


class UnboundedRootPolyhedron(GeometryError):
    """A root polyhedron is unbounded; happens only for non-complete skeletons."""

    def __init__(self, message, ray=None):
        super().__init__(message)
        self.ray = ray


class UnknownRay(GeometryError):
    """The vector handed in cannot serve as a ray for this root set."""


class NotARoot(GeometryError):
    """The character is not a root of the projective-space root system."""


class InvalidParameter(GeometryError):
    """A constructor parameter is out of range or malformed."""
