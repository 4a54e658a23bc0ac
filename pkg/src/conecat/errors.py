"""Exception types shared across the package."""


class ConecatError(Exception):
    """Base class for all domain errors."""


class DegenerateTriangle(ConecatError):
    """Side data violates the (strict) triangle inequality or model bounds."""


class PerimeterTooLarge(ConecatError):
    """Triangle perimeter exceeds 2*pi/sqrt(kappa) for the target curvature."""


class EdgeLengthMismatch(ConecatError):
    """Glued edges have different lengths."""


class UnmatchedEdge(ConecatError):
    """Some (triangle, edge) slot is not glued; the surface would be open."""


class NonManifoldGluing(ConecatError):
    """An edge slot is used twice, glued to itself, or malformed."""


class NotSpherical(ConecatError):
    """Multiplicities (p, q, r) do not satisfy 1/p + 1/q + 1/r > 1."""


class NotApplicable(ConecatError):
    """Operation preconditions fail for this input (reported, not a bug)."""


class InconsistentRegion(ConecatError):
    """Disk region data does not fit the quotient sphere it refers to."""


class DuplicateLines(ConecatError):
    """Arrangement contains two identical projective lines."""


class NotAdmissible(ConecatError):
    """Orbifold structure violates the multiple-point admissibility rules."""


class NotNamedArrangement(ConecatError):
    """Operation requires one of the named arrangements with metric data."""
