"""Exception types raised across the package.

All of them derive from :class:`PolyhedronError`, itself a ``ValueError``,
so callers that only care about "bad input" can catch one thing.
"""


class PolyhedronError(ValueError):
    """Base class for every domain error in this package."""


# structural validation
class NonCubicError(PolyhedronError):
    pass


class OpenEdgeError(PolyhedronError):
    pass


class OrientationClashError(PolyhedronError):
    pass


class EulerViolationError(PolyhedronError):
    pass


class RepeatedVertexError(PolyhedronError):
    pass


class MultiEdgeDualError(PolyhedronError):
    """Two faces share more than one edge, so the dual is not a simple graph."""


# angles
class MissingAngleError(PolyhedronError):
    pass


class ObtuseAngleError(PolyhedronError):
    pass


class AngleSumError(PolyhedronError):
    pass


class UnderdeterminedError(PolyhedronError):
    pass


class InconsistentAnglesError(PolyhedronError):
    pass


# parameters
class BadParameterError(PolyhedronError):
    """An integer parameter (n, m, k, v) is outside its allowed range."""


class NotACubeError(PolyhedronError):
    pass


class SingularSystemError(PolyhedronError):
    pass
