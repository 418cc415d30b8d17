"""Geodesic Hausdorff distance between finite point sets in a simple polygon.

Nearest neighbours are found by brute force: every pair costs one
shortest-path query, so the work is ``|A| * |B|`` paths.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .errors import EmptyInput
from .geodesic import GeodesicDomain
from .geometry import Point, SimplePolygon, _as_point


def validate_points(points, domain: GeodesicDomain) -> List[Point]:
    """Coordinates as float pairs, each checked to lie in the polygon."""
    pts = [_as_point(p) for p in points]
    if not pts:
        raise EmptyInput("a point set must not be empty")
    for q in pts:
        domain.locate(q)
    return pts


def _domain(polygon: Optional[SimplePolygon], domain: Optional[GeodesicDomain]) -> GeodesicDomain:
    if domain is None:
        if polygon is None:
            raise ValueError("need a polygon or a prepared domain")
        domain = GeodesicDomain(polygon)
    return domain


def directed_hausdorff(A: Sequence[Point], B: Sequence[Point], polygon: Optional[SimplePolygon] = None,
                       domain: Optional[GeodesicDomain] = None) -> float:
    """Largest geodesic distance from a point of A to its nearest point of B."""
    domain = _domain(polygon, domain)
    A = validate_points(A, domain)
    B = validate_points(B, domain)
    worst = 0.0
    for a in A:
        best = min(domain.distance(a, b) for b in B)
        if best > worst:
            worst = best
    return worst


def hausdorff(A: Sequence[Point], B: Sequence[Point], polygon: Optional[SimplePolygon] = None,
              domain: Optional[GeodesicDomain] = None) -> float:
    """Symmetric geodesic Hausdorff distance."""
    domain = _domain(polygon, domain)
    return max(directed_hausdorff(A, B, domain=domain), directed_hausdorff(B, A, domain=domain))
