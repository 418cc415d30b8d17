"""Exception hierarchy shared by all modules."""


class GeoFrechetError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(GeoFrechetError, ValueError):
    """Input geometry or arguments failed validation."""


class TooFewVertices(ValidationError):
    pass


class SelfIntersecting(ValidationError):
    pass


class DegenerateArea(ValidationError):
    pass


class DuplicateVertex(ValidationError):
    pass


class NonFiniteCoordinate(ValidationError):
    pass


class PointOutsidePolygon(ValidationError):
    pass


class NegativeEpsilon(ValidationError):
    pass


class MonotonicityViolation(GeoFrechetError):
    pass


class EmptySlab(GeoFrechetError):
    pass


class EmptyInput(ValidationError):
    pass


class NonTermination(GeoFrechetError, RuntimeError):
    """The optimization loop exceeded its worst-case iteration guard."""
