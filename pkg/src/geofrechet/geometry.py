"""Planar predicates, simple polygons, ear-clipping triangulation and point location.

Points are plain ``(x, y)`` float tuples throughout the package.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DegenerateArea,
    DuplicateVertex,
    NonFiniteCoordinate,
    PointOutsidePolygon,
    SelfIntersecting,
    TooFewVertices,
)

Point = Tuple[float, float]

# Shewchuk's first-stage error bound for the 2x2 orientation determinant.
_MACHINE_EPS = 2.0 ** -53
_CCW_ERRBOUND = (3.0 + 16.0 * _MACHINE_EPS) * _MACHINE_EPS


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of twice the signed area of triangle abc (+1 ccw, -1 cw, 0 collinear).

    Evaluated in floating point when the result is certified by the error
    bound, otherwise recomputed exactly with rationals.
    """
    acx, bcy = a[0] - c[0], b[1] - c[1]
    acy, bcx = a[1] - c[1], b[0] - c[0]
    detleft = acx * bcy
    detright = acy * bcx
    # a float difference is zero only for equal operands, so a zero factor is exact
    left_zero = acx == 0.0 or bcy == 0.0
    right_zero = acy == 0.0 or bcx == 0.0
    if left_zero and right_zero:
        return 0
    det = detleft - detright
    bound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return _orient_exact(a, b, c)


def _orient_exact(a: Point, b: Point, c: Point) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (det > 0) - (det < 0)


def _as_point(p) -> Point:
    try:
        x, y = p
        x, y = float(x), float(y)
    except (TypeError, ValueError) as exc:
        raise NonFiniteCoordinate(f"not a coordinate pair: {p!r}") from exc
    if not (math.isfinite(x) and math.isfinite(y)):
        raise NonFiniteCoordinate(f"non-finite coordinate: {p!r}")
    return (x, y)


def dist(p: Point, q: Point) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def signed_area(vertices: Sequence[Point]) -> float:
    s = 0.0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def on_segment(p: Point, q: Point, r: Point) -> bool:
    """True if r lies on the closed segment pq."""
    if orient(p, q, r) != 0:
        return False
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed-segment intersection test (touching counts)."""
    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and on_segment(p1, p2, q1))
            or (o2 == 0 and on_segment(p1, p2, q2))
            or (o3 == 0 and on_segment(q1, q2, p1))
            or (o4 == 0 and on_segment(q1, q2, p2)))


@dataclass(frozen=True)
class SimplePolygon:
    """A simple polygon with counterclockwise vertex order."""

    vertices: Tuple[Point, ...]

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    @property
    def area(self) -> float:
        return signed_area(self.vertices)

    def contains(self, q: Point) -> bool:
        return point_in_polygon(self, q)

    def diameter_bound(self) -> float:
        """Upper bound on any geodesic distance inside the polygon (its perimeter / 2)."""
        return 0.5 * sum(dist(a, b) for a, b in self.edges())


def validate_polygon(raw) -> SimplePolygon:
    """Validate a vertex sequence and return it as a ccw :class:`SimplePolygon`."""
    pts = [_as_point(p) for p in raw]
    if len(pts) < 3:
        raise TooFewVertices(f"polygon needs at least 3 vertices, got {len(pts)}")
    n = len(pts)
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise DuplicateVertex(f"repeated polygon vertex {pts[i]}")
    if all(orient(pts[0], pts[1], q) == 0 for q in pts[2:]):
        raise DegenerateArea("all polygon vertices are collinear")
    _check_simple(pts)
    area = signed_area(pts)
    if area == 0.0:
        raise DegenerateArea("polygon has zero signed area")
    if area < 0:
        pts.reverse()
    return SimplePolygon(tuple(pts))


def _check_simple(pts: Sequence[Point]) -> None:
    n = len(pts)
    # Adjacent edges may only share their common vertex, so a fold-back is an error.
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orient(a, b, c) == 0:
            if (c[0] - b[0]) * (a[0] - b[0]) + (c[1] - b[1]) * (a[1] - b[1]) > 0:
                raise SelfIntersecting(f"edges overlap at vertex {b}")
    # Bounding boxes prune most non-adjacent pairs cheaply.
    arr = np.asarray(pts)
    nxt = np.roll(arr, -1, axis=0)
    lo = np.minimum(arr, nxt)
    hi = np.maximum(arr, nxt)
    for i in range(n):
        overlap = np.all((lo <= hi[i]) & (hi >= lo[i]), axis=1)
        for j in np.nonzero(overlap)[0]:
            j = int(j)
            if j <= i or j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]):
                raise SelfIntersecting(
                    f"edges {i} and {j} intersect")


def point_in_polygon(polygon: SimplePolygon, q: Point) -> bool:
    """Closed point-in-polygon test (boundary points are inside)."""
    inside = False
    x, y = q
    for a, b in polygon.edges():
        if on_segment(a, b, q):
            return True
        if (a[1] > y) != (b[1] > y):
            # upward edge: q must be left of it; downward edge: right of it
            o = orient(a, b, q)
            if (b[1] > a[1]) == (o > 0):
                inside = not inside
    return inside


def segment_inside(polygon: SimplePolygon, p: Point, q: Point) -> bool:
    """True if the closed segment pq lies in the closed polygon."""
    if p == q:
        return point_in_polygon(polygon, p)
    ts = [0.0, 1.0]
    along = []  # parameter ranges where pq runs along a polygon edge
    dx, dy = q[0] - p[0], q[1] - p[1]
    norm2 = dx * dx + dy * dy

    def param(v):
        return ((v[0] - p[0]) * dx + (v[1] - p[1]) * dy) / norm2

    for a, b in polygon.edges():
        o1 = orient(p, q, a)
        o2 = orient(p, q, b)
        o3 = orient(a, b, p)
        o4 = orient(a, b, q)
        if o1 * o2 < 0 and o3 * o4 < 0:
            return False
        for v, o in ((a, o1), (b, o2)):
            if o == 0 and on_segment(p, q, v):
                ts.append(param(v))
        if o1 == 0 and o2 == 0:
            ta, tb = sorted((param(a), param(b)))
            along.append((ta, tb))
    ts.sort()
    for t0, t1 in zip(ts, ts[1:]):
        if t1 - t0 <= 0.0:
            continue
        tm = 0.5 * (t0 + t1)
        if any(ta <= tm <= tb for ta, tb in along):
            continue
        if not point_in_polygon(polygon, (p[0] + tm * dx, p[1] + tm * dy)):
            return False
    return True


@dataclass(frozen=True)
class PolygonalCurve:
    vertices: Tuple[Point, ...]

    @property
    def n_segments(self) -> int:
        return len(self.vertices) - 1

    def length(self) -> float:
        return sum(dist(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def at(self, s: float) -> Point:
        """Point at curve parameter s in [0, n_segments] (uniform per segment)."""
        n = self.n_segments
        if n == 0:
            return self.vertices[0]
        i = min(int(s), n - 1)
        u = s - i
        (x0, y0), (x1, y1) = self.vertices[i], self.vertices[i + 1]
        return (x0 + u * (x1 - x0), y0 + u * (y1 - y0))


def validate_curve(raw, polygon: Optional[SimplePolygon] = None) -> PolygonalCurve:
    pts = [_as_point(p) for p in raw]
    if not pts:
        raise TooFewVertices("a curve needs at least one vertex")
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise DuplicateVertex(f"consecutive duplicate curve vertex {a}")
    if polygon is not None:
        if len(pts) == 1 and not point_in_polygon(polygon, pts[0]):
            raise PointOutsidePolygon(f"curve point {pts[0]} is outside the polygon")
        for a, b in zip(pts, pts[1:]):
            if not segment_inside(polygon, a, b):
                raise PointOutsidePolygon(f"curve segment {a}-{b} leaves the polygon")
    return PolygonalCurve(tuple(pts))


@dataclass(frozen=True)
class Triangulation:
    """Triangles as ccw vertex-index triples plus the dual tree.

    ``adjacency[t]`` lists ``(neighbor, (u, v))`` where ``(u, v)`` is the shared
    diagonal, ordered as a ccw edge of triangle ``t``.
    """

    triangles: Tuple[Tuple[int, int, int], ...]
    adjacency: Tuple[Tuple[Tuple[int, Tuple[int, int]], ...], ...]
    _coords: np.ndarray = field(repr=False, compare=False, default=None)

    def __len__(self):
        return len(self.triangles)


def triangulate(polygon: SimplePolygon) -> Triangulation:
    """Ear-clipping triangulation, O(k^2)."""
    pts = polygon.vertices
    n = len(pts)
    prev = [(i - 1) % n for i in range(n)]
    nxt = [(i + 1) % n for i in range(n)]
    alive = [True] * n

    def convex(i):
        return orient(pts[prev[i]], pts[i], pts[nxt[i]]) > 0

    def is_ear(i, strict=True):
        if not convex(i):
            return False
        a, b, c = pts[prev[i]], pts[i], pts[nxt[i]]
        for j in range(n):
            if not alive[j] or j in (prev[i], i, nxt[i]):
                continue
            v = pts[j]
            if v in (a, b, c):
                continue
            o1, o2, o3 = orient(a, b, v), orient(b, c, v), orient(c, a, v)
            if o1 >= 0 and o2 >= 0 and o3 >= 0:
                # on the new diagonal ca is only fatal in strict mode
                if strict or o1 > 0 and o2 > 0:
                    return False
        return True

    triangles = []
    remaining = n
    ear = [is_ear(i) for i in range(n)]
    i = 0
    stall = 0
    strict = True
    refreshed = False
    while remaining > 3:
        if alive[i] and ear[i]:
            a, c = prev[i], nxt[i]
            triangles.append((a, i, c))
            alive[i] = False
            nxt[a] = c
            prev[c] = a
            remaining -= 1
            ear[a] = is_ear(a, strict)
            ear[c] = is_ear(c, strict)
            i = c
            stall = 0
            refreshed = False
            continue
        i = nxt[i] if alive[i] else (i + 1) % n
        stall += 1
        if stall > 2 * n:
            # Only neighbours are re-tested after a clip; refresh everything once,
            # then allow vertices on the closing diagonal as a last resort.
            if refreshed:
                if not strict:
                    raise SelfIntersecting("ear clipping found no ear; polygon is not simple")
                strict = False
            for j in range(n):
                if alive[j]:
                    ear[j] = is_ear(j, strict)
            refreshed = True
            stall = 0
    rest = [j for j in range(n) if alive[j]]
    j0 = rest[0]
    triangles.append((prev[j0], j0, nxt[j0]))

    edge_owner = {}
    adjacency = [[] for _ in triangles]
    for t, (a, b, c) in enumerate(triangles):
        for u, v in ((a, b), (b, c), (c, a)):
            key = (min(u, v), max(u, v))
            if key in edge_owner:
                s, (su, sv) = edge_owner[key]
                adjacency[t].append((s, (u, v)))
                adjacency[s].append((t, (su, sv)))
            else:
                edge_owner[key] = (t, (u, v))
    coords = np.array([[pts[a], pts[b], pts[c]] for a, b, c in triangles], dtype=float)
    return Triangulation(
        tuple(triangles),
        tuple(tuple(adj) for adj in adjacency),
        coords,
    )


def locate(polygon: SimplePolygon, tri: Triangulation, q: Point) -> Optional[int]:
    """Index of a triangle containing q (boundary inclusive), or None if outside."""
    c = tri._coords
    if c is None:
        c = np.array([[polygon.vertices[i] for i in t] for t in tri.triangles], dtype=float)
    qx, qy = q
    ax, ay = c[:, 0, 0], c[:, 0, 1]
    bx, by = c[:, 1, 0], c[:, 1, 1]
    cx, cy = c[:, 2, 0], c[:, 2, 1]
    d1 = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax)
    d2 = (cx - bx) * (qy - by) - (cy - by) * (qx - bx)
    d3 = (ax - cx) * (qy - cy) - (ay - cy) * (qx - cx)
    scale = 1e-9 * (1.0 + abs(qx) + abs(qy) + float(np.abs(c).max())) ** 2
    cand = np.nonzero((d1 >= -scale) & (d2 >= -scale) & (d3 >= -scale))[0]
    # candidates ordered so that clearly-inside triangles are tried first
    cand = sorted(cand, key=lambda t: -min(d1[t], d2[t], d3[t]))
    pts = polygon.vertices
    for t in cand:
        a, b, cc = tri.triangles[t]
        A, B, C = pts[a], pts[b], pts[cc]
        if orient(A, B, q) >= 0 and orient(B, C, q) >= 0 and orient(C, A, q) >= 0:
            return int(t)
    return None


def require_inside(polygon: SimplePolygon, tri: Triangulation, q: Point) -> int:
    t = locate(polygon, tri, q)
    if t is None:
        raise PointOutsidePolygon(f"point {q} is outside the polygon")
    return t


def dual_tree_is_tree(tri: Triangulation) -> bool:
    n = len(tri.triangles)
    n_edges = sum(len(a) for a in tri.adjacency) // 2
    if n_edges != n - 1:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for s, _ in tri.adjacency[t]:
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return len(seen) == n
