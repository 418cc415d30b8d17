"""Shortest paths inside a simple polygon and funnel distance functions.

Shortest paths are found by walking the sleeve of triangles between the two
endpoints in the dual tree of a triangulation and pulling a string through the
diagonals (the funnel algorithm).  A :class:`Funnel` holds the two shortest-path
chains from an apex point to the ends of a segment; its
:class:`BoundaryDistanceFunction` gives ``d(p, q)`` for every q on that segment
as a chain of arcs ``L + |q - v|``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import NegativeEpsilon, PointOutsidePolygon
from .geometry import (
    Point,
    SimplePolygon,
    Triangulation,
    locate,
    orient,
    triangulate,
)

# Arcs narrower than this (in the segment parameter) are merged into a neighbour.
ARC_MERGE_WIDTH = 1e-12


@dataclass(frozen=True)
class GeodesicPath:
    vertices: Tuple[Point, ...]
    length: float


@dataclass(frozen=True)
class Funnel:
    """Shortest paths from ``p`` to the segment ``cd``.

    ``chain_c`` and ``chain_d`` start at the apex (the last vertex shared by
    the paths to c and to d) and end at c and d respectively.  ``lengths_c`` and
    ``lengths_d`` hold the geodesic distance from ``p`` to every chain vertex.
    """

    p: Point
    base: Tuple[Point, Point]
    apex: Point
    chain_c: Tuple[Point, ...]
    chain_d: Tuple[Point, ...]
    lengths_c: Tuple[float, ...]
    lengths_d: Tuple[float, ...]


def _dist2(a, b):
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def _string_pull(a: Point, b: Point, portals: Sequence[Tuple[Point, Point]]) -> List[Point]:
    """Funnel algorithm over (left, right) portals from a to b."""
    pts = [(a, a)]
    pts.extend(portals)
    pts.append((b, b))
    path = [a]
    apex = left = right = a
    apex_i = left_i = right_i = 0
    i = 1
    n = len(pts)
    while i < n:
        pl, pr = pts[i]

        if apex == right or orient(apex, right, pr) >= 0:
            o = orient(apex, left, pr) if apex != left else -1
            if (apex == right or pr == apex or o < 0
                    or (o == 0 and _dist2(apex, pr) < _dist2(apex, left))):
                right, right_i = pr, i
            else:
                path.append(left)
                apex, apex_i = left, left_i
                left = right = apex
                left_i = right_i = apex_i
                i = apex_i + 1
                continue

        if apex == left or orient(apex, left, pl) <= 0:
            o = orient(apex, right, pl) if apex != right else 1
            if (apex == left or pl == apex or o > 0
                    or (o == 0 and _dist2(apex, pl) < _dist2(apex, right))):
                left, left_i = pl, i
            else:
                path.append(right)
                apex, apex_i = right, right_i
                left = right = apex
                left_i = right_i = apex_i
                i = apex_i + 1
                continue

        i += 1

    if path[-1] != b:
        path.append(b)
    return path


def _path_length(vertices):
    total = 0.0
    for u, v in zip(vertices, vertices[1:]):
        total += math.hypot(v[0] - u[0], v[1] - u[1])
    return total


class GeodesicDomain:
    """A simple polygon prepared for repeated shortest-path queries.

    Point locations and vertex-to-vertex paths are memoized, so building all
    boundary funnels of a free-space diagram costs one path per pair of curve
    vertices.
    """

    def __init__(self, polygon: SimplePolygon, triangulation: Optional[Triangulation] = None):
        self.polygon = polygon
        self.triangulation = triangulation if triangulation is not None else triangulate(polygon)
        tri = self.triangulation
        n = len(tri.triangles)
        self._parent = [-1] * n
        self._portal_up = [None] * n
        self._depth = [0] * n
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            t = queue.popleft()
            for s, _ in tri.adjacency[t]:
                if not seen[s]:
                    seen[s] = True
                    self._parent[s] = t
                    self._depth[s] = self._depth[t] + 1
                    queue.append(s)
        # ccw edge of the child triangle facing its parent
        for t in range(n):
            for s, (u, v) in tri.adjacency[t]:
                if s == self._parent[t]:
                    self._portal_up[t] = (u, v)
        self._locations = {}
        self._paths = {}

    def locate(self, q: Point) -> int:
        t = self._locations.get(q)
        if t is None:
            t = locate(self.polygon, self.triangulation, q)
            if t is None:
                raise PointOutsidePolygon(f"point {q} is outside the polygon")
            self._locations[q] = t
        return t

    def _portals(self, ta: int, tb: int) -> List[Tuple[Point, Point]]:
        pts = self.polygon.vertices
        parent, depth, up = self._parent, self._depth, self._portal_up
        rising = []   # portals crossed going from ta towards the root
        falling = []  # portals crossed going from tb towards the root (reversed later)
        x, y = ta, tb
        while x != y:
            if depth[x] >= depth[y]:
                u, v = up[x]
                rising.append((pts[v], pts[u]))
                x = parent[x]
            else:
                u, v = up[y]
                # entering y from its parent crosses the edge the other way round
                falling.append((pts[u], pts[v]))
                y = parent[y]
        falling.reverse()
        return rising + falling

    def shortest_path(self, a: Point, b: Point) -> GeodesicPath:
        key = (a, b)
        hit = self._paths.get(key)
        if hit is not None:
            return hit
        rev = self._paths.get((b, a))
        if rev is not None:
            path = GeodesicPath(tuple(reversed(rev.vertices)), rev.length)
            self._paths[key] = path
            return path
        if a == b:
            self.locate(a)
            path = GeodesicPath((a,), 0.0)
        else:
            ta, tb = self.locate(a), self.locate(b)
            verts = _string_pull(a, b, self._portals(ta, tb)) if ta != tb else [a, b]
            # accumulate lengths from a so prefixes shared by two paths agree bit for bit
            path = GeodesicPath(tuple(verts), _path_length(verts))
        self._paths[key] = path
        return path

    def distance(self, a: Point, b: Point) -> float:
        return self.shortest_path(a, b).length

    def funnel(self, p: Point, c: Point, d: Point) -> Funnel:
        pc = self.shortest_path(p, c).vertices
        pd = self.shortest_path(p, d).vertices
        k = 0
        while k + 1 < len(pc) and k + 1 < len(pd) and pc[k + 1] == pd[k + 1]:
            k += 1
        return Funnel(
            p=p,
            base=(c, d),
            apex=pc[k],
            chain_c=pc[k:],
            chain_d=pd[k:],
            lengths_c=tuple(_cumulative(pc)[k:]),
            lengths_d=tuple(_cumulative(pd)[k:]),
        )

    def boundary_function(self, p: Point, c: Point, d: Point) -> "BoundaryDistanceFunction":
        return distance_function(self.funnel(p, c, d))


def _cumulative(vertices):
    out = [0.0]
    total = 0.0
    for u, v in zip(vertices, vertices[1:]):
        total += math.hypot(v[0] - u[0], v[1] - u[1])
        out.append(total)
    return out


class BoundaryDistanceFunction:
    """``F(t) = d(p, c + t (d - c))`` on ``t in [0, 1]`` as a chain of arcs.

    Arc ``k`` covers ``[lo[k], hi[k]]`` and evaluates to
    ``L[k] + |c + t (d - c) - v[k]|``.  The function is decreasing then
    increasing, which every query below exploits.
    """

    __slots__ = ("c", "d", "lo", "hi", "L", "vertex", "_ex", "_ey", "_dx", "_dy", "_a",
                 "_tv", "_perp2", "_val_lo", "_val_hi", "kmin", "min_t", "min_val")

    def __init__(self, c: Point, d: Point, arcs: Sequence[Tuple[float, float, float, Point]]):
        self.c = c
        self.d = d
        self.lo = [a[0] for a in arcs]
        self.hi = [a[1] for a in arcs]
        self.L = [a[2] for a in arcs]
        self.vertex = [a[3] for a in arcs]
        dx, dy = d[0] - c[0], d[1] - c[1]
        self._dx, self._dy = dx, dy
        self._a = dx * dx + dy * dy
        self._ex = [c[0] - v[0] for v in self.vertex]
        self._ey = [c[1] - v[1] for v in self.vertex]
        self._tv = []
        self._perp2 = []
        for ex, ey in zip(self._ex, self._ey):
            tv = -(ex * dx + ey * dy) / self._a if self._a > 0 else 0.0
            px, py = ex + tv * dx, ey + tv * dy
            self._tv.append(tv)
            self._perp2.append(px * px + py * py)
        self._val_lo = [self._arc_value(k, self.lo[k]) for k in range(len(arcs))]
        self._val_hi = [self._arc_value(k, self.hi[k]) for k in range(len(arcs))]
        self._find_min()

    @classmethod
    def point_segment(cls, p: Point, c: Point, d: Point) -> "BoundaryDistanceFunction":
        """Euclidean distance from p to the points of cd (a single arc)."""
        return cls(c, d, [(0.0, 1.0, 0.0, p)])

    def __len__(self):
        return len(self.lo)

    @property
    def arcs(self):
        return list(zip(self.lo, self.hi, self.L, self.vertex))

    def _arc_value(self, k: int, t: float) -> float:
        return self.L[k] + math.hypot(self._ex[k] + t * self._dx, self._ey[k] + t * self._dy)

    def arc_index(self, t: float) -> int:
        hi = self.hi
        lo_i, hi_i = 0, len(hi) - 1
        while lo_i < hi_i:
            mid = (lo_i + hi_i) // 2
            if hi[mid] < t:
                lo_i = mid + 1
            else:
                hi_i = mid
        return lo_i

    def value(self, t: float) -> float:
        return self._arc_value(self.arc_index(t), t)

    def __call__(self, t: float) -> float:
        return self.value(t)

    def _find_min(self):
        # first arc that is non-decreasing at its right end
        tv, hi, lo = self._tv, self.hi, self.lo
        a, b = 0, len(hi)
        while a < b:
            mid = (a + b) // 2
            if tv[mid] <= hi[mid]:
                b = mid
            else:
                a = mid + 1
        k = min(a, len(hi) - 1)
        t = min(max(tv[k], lo[k]), hi[k])
        self.kmin = k
        self.min_t = t
        self.min_val = self._arc_value(k, t)

    def crossings(self, eps: float) -> Optional[Tuple[float, float]]:
        if eps < 0:
            raise NegativeEpsilon(f"epsilon must be non-negative, got {eps}")
        if eps < self.min_val:
            return None
        return self.lower(eps), self.upper(eps)

    def lower(self, eps: float) -> float:
        """Smallest t with F(t) <= eps, assuming eps >= min_val."""
        if self._val_lo[0] <= eps:
            return 0.0
        kmin = self.kmin
        vhi = self._val_hi
        a, b = 0, kmin
        while a < b:
            mid = (a + b) // 2
            if vhi[mid] <= eps:
                b = mid
            else:
                a = mid + 1
        k = a
        end = self.min_t if k == kmin else self.hi[k]
        if self._a == 0.0:
            return self.lo[k]
        r = eps - self.L[k]
        half = math.sqrt(max(0.0, r * r - self._perp2[k]) / self._a)
        t = self._tv[k] - half
        return min(max(t, self.lo[k]), end)

    def upper(self, eps: float) -> float:
        """Largest t with F(t) <= eps, assuming eps >= min_val."""
        last = len(self.hi) - 1
        if self._val_hi[last] <= eps:
            return 1.0
        kmin = self.kmin
        vlo = self._val_lo
        a, b = kmin, last
        while a < b:
            mid = (a + b + 1) // 2
            if vlo[mid] <= eps:
                a = mid
            else:
                b = mid - 1
        k = a
        start = self.min_t if k == kmin else self.lo[k]
        if self._a == 0.0:
            return self.hi[k]
        r = eps - self.L[k]
        half = math.sqrt(max(0.0, r * r - self._perp2[k]) / self._a)
        t = self._tv[k] + half
        return max(min(t, self.hi[k]), start)


def distance_function(f: Funnel) -> BoundaryDistanceFunction:
    """Arc decomposition of the funnel's distance function along its base."""
    c, d = f.base
    if len(f.chain_c) > 1:
        gov = list(zip(reversed(f.chain_c[:-1]), reversed(f.lengths_c[:-1])))
    else:
        gov = [(f.apex, f.lengths_c[0])]
    gov.extend(zip(f.chain_d[1:-1], f.lengths_d[1:-1]))

    dx, dy = d[0] - c[0], d[1] - c[1]
    cuts = []
    prev_cut = 0.0
    for (g0, _), (g1, _) in zip(gov, gov[1:]):
        # the governing vertex switches where the line g0 g1 meets cd
        ex, ey = g1[0] - g0[0], g1[1] - g0[1]
        den = dx * ey - dy * ex
        num = (g0[0] - c[0]) * ey - (g0[1] - c[1]) * ex
        if den != 0.0:
            t = num / den
        else:
            t = prev_cut
        t = min(max(t, prev_cut), 1.0)
        cuts.append(t)
        prev_cut = t

    bounds = [0.0] + cuts + [1.0]
    arcs = []
    for k, (v, L) in enumerate(gov):
        lo, hi = bounds[k], bounds[k + 1]
        if hi - lo < ARC_MERGE_WIDTH and len(gov) > 1:
            continue
        arcs.append([lo, hi, L, v])
    if not arcs:
        v, L = gov[len(gov) // 2]
        arcs.append([0.0, 1.0, L, v])
    arcs[0][0] = 0.0
    for k in range(1, len(arcs)):
        arcs[k][0] = arcs[k - 1][1]
    arcs[-1][1] = 1.0
    return BoundaryDistanceFunction(c, d, [tuple(a) for a in arcs])


def shortest_path(polygon: SimplePolygon, triangulation: Triangulation, a: Point, b: Point) -> GeodesicPath:
    return GeodesicDomain(polygon, triangulation).shortest_path(a, b)


def build_funnel(polygon: SimplePolygon, triangulation: Triangulation, p: Point,
                 cd: Tuple[Point, Point]) -> Funnel:
    return GeodesicDomain(polygon, triangulation).funnel(p, cd[0], cd[1])


def min_of(F: BoundaryDistanceFunction) -> Tuple[float, float]:
    return F.min_t, F.min_val


def eps_crossings(F: BoundaryDistanceFunction, eps: float) -> Optional[Tuple[float, float]]:
    """The free interval ``{t : F(t) <= eps}`` as ``(t1, t2)``, or None if empty."""
    return F.crossings(eps)
