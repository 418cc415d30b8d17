"""Geodesic Fréchet and Hausdorff distances inside a simple polygon."""

from .errors import (
    DegenerateArea,
    DuplicateVertex,
    EmptyInput,
    EmptySlab,
    GeoFrechetError,
    MonotonicityViolation,
    NegativeEpsilon,
    NonFiniteCoordinate,
    NonTermination,
    PointOutsidePolygon,
    SelfIntersecting,
    TooFewVertices,
    ValidationError,
)
from .freespace import FreeSpace, cell_boundaries, decide
from .geodesic import BoundaryDistanceFunction, Funnel, GeodesicDomain, GeodesicPath, build_funnel, shortest_path
from .geometry import PolygonalCurve, SimplePolygon, orient, triangulate, validate_curve, validate_polygon
from .hausdorff import directed_hausdorff, hausdorff
from .optimize import FrechetResult, frechet, frechet_euclidean, frechet_geodesic

__all__ = [
    "BoundaryDistanceFunction", "DegenerateArea", "DuplicateVertex", "EmptyInput", "EmptySlab",
    "FreeSpace", "FrechetResult", "Funnel", "GeoFrechetError", "GeodesicDomain", "GeodesicPath",
    "MonotonicityViolation", "NegativeEpsilon", "NonFiniteCoordinate", "NonTermination",
    "PointOutsidePolygon", "PolygonalCurve", "SelfIntersecting", "SimplePolygon", "TooFewVertices",
    "ValidationError", "build_funnel", "cell_boundaries", "decide", "directed_hausdorff", "frechet",
    "frechet_euclidean", "frechet_geodesic", "hausdorff", "orient", "shortest_path", "triangulate",
    "validate_curve", "validate_polygon",
]
