"""Exception hierarchy shared by all modules.

Every domain error carries a stable ``code`` used by the CLI when it emits
machine-readable error JSON.
"""


class ToricDiamondError(Exception):
    code = "ERROR"

    def __init__(self, message="", **context):
        super().__init__(message or self.__doc__ or self.code)
        self.context = context


class DegenerateInput(ToricDiamondError):
    """Geometric input is degenerate (collinear points, too few vertices)."""
    code = "DEGENERATE_INPUT"


class UnboundedRegion(ToricDiamondError):
    """The half-plane intersection is nonempty but unbounded."""
    code = "UNBOUNDED_REGION"


class OriginNotInterior(ToricDiamondError):
    """The origin is not strictly interior to the polygon."""
    code = "ORIGIN_NOT_INTERIOR"


class NotFano(ToricDiamondError):
    """The marked points are not in strictly convex position."""
    code = "NOT_FANO"


class PreconditionFailed(ToricDiamondError):
    """A named predicate required by this operation is false."""
    code = "PRECONDITION_FAILED"


class InvalidWeights(ToricDiamondError):
    """Weighted projective plane weights are invalid."""
    code = "INVALID_WEIGHTS"


class BoundaryProximity(ToricDiamondError):
    """Evaluation point is within the boundary safety margin."""
    code = "BOUNDARY_PROXIMITY"


class NonConvergence(ToricDiamondError):
    """Newton iteration did not reach the requested residual."""
    code = "NON_CONVERGENCE"


class DegenerateMatrix(ToricDiamondError):
    """A weight matrix has a vanishing maximal minor."""
    code = "DEGENERATE_MATRIX"


class NotReduced(ToricDiamondError):
    """Weight matrix determinantal divisor is not 1."""
    code = "NOT_REDUCED"


class NotAdmissible(ToricDiamondError):
    """Weight matrix fails the admissibility gcd condition."""
    code = "NOT_ADMISSIBLE"


class NormalizationImpossible(ToricDiamondError):
    """Column normalization cannot resolve zero or parallel columns."""
    code = "NORMALIZATION_IMPOSSIBLE"


class NotConvex(ToricDiamondError):
    """Isotropy data does not assemble into a strictly convex polygon."""
    code = "NOT_CONVEX"


class NotSpecialSymmetric(ToricDiamondError):
    """The polygon is not antipodally symmetric."""
    code = "NOT_SPECIAL_SYMMETRIC"


class TooLarge(ToricDiamondError):
    """Brute-force enumeration would exceed the configured size cap."""
    code = "TOO_LARGE"


class InternalInconsistency(ToricDiamondError):
    """Two routes that must agree produced different answers."""
    code = "INTERNAL_INCONSISTENCY"


class InvalidParameter(ToricDiamondError):
    """A family parameter is out of range."""
    code = "INVALID_PARAMETER"
