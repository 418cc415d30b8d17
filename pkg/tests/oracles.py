"""Brute-force reference computations used to freeze and cross-check results.

Nothing here touches the triangulation, the funnel code or the free-space
sweep of the package; only the exact predicates from ``geometry`` are shared.
"""

import heapq
import math

from geofrechet.geometry import point_in_polygon, segment_inside


def _dist(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


class VisibilityOracle:
    """Geodesic distances by Dijkstra over the visibility graph of polygon vertices."""

    def __init__(self, polygon):
        self.polygon = polygon
        self.verts = list(polygon.vertices)
        n = len(self.verts)
        self.vis = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                ok = segment_inside(polygon, self.verts[i], self.verts[j])
                self.vis[i][j] = self.vis[j][i] = ok
        # all-pairs vertex distances (Dijkstra from every vertex)
        self.vdist = [self._dijkstra_from(i) for i in range(n)]

    def _dijkstra_from(self, s):
        n = len(self.verts)
        best = [math.inf] * n
        best[s] = 0.0
        heap = [(0.0, s)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > best[u]:
                continue
            for v in range(n):
                if v != u and self.vis[u][v]:
                    nd = d + _dist(self.verts[u], self.verts[v])
                    if nd < best[v]:
                        best[v] = nd
                        heapq.heappush(heap, (nd, v))
        return best

    def visible_vertices(self, p):
        return [i for i, v in enumerate(self.verts) if segment_inside(self.polygon, p, v)]

    def distance(self, a, b):
        if not point_in_polygon(self.polygon, a) or not point_in_polygon(self.polygon, b):
            raise ValueError("point outside polygon")
        if segment_inside(self.polygon, a, b):
            return _dist(a, b)
        va = self.visible_vertices(a)
        vb = self.visible_vertices(b)
        best = math.inf
        for i in va:
            da = _dist(a, self.verts[i])
            for j in vb:
                cand = da + self.vdist[i][j] + _dist(self.verts[j], b)
                if cand < best:
                    best = cand
        return best


def discrete_frechet(dist_matrix):
    """Eiter-Mannila coupling distance over a precomputed distance matrix."""
    n = len(dist_matrix)
    m = len(dist_matrix[0])
    ca = [[0.0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            d = dist_matrix[i][j]
            if i == 0 and j == 0:
                ca[i][j] = d
            elif i == 0:
                ca[i][j] = max(ca[i][j - 1], d)
            elif j == 0:
                ca[i][j] = max(ca[i - 1][j], d)
            else:
                ca[i][j] = max(min(ca[i - 1][j], ca[i - 1][j - 1], ca[i][j - 1]), d)
    return ca[n - 1][m - 1]


def refine(vertices, per_segment):
    pts = [vertices[0]]
    for a, b in zip(vertices, vertices[1:]):
        for k in range(1, per_segment + 1):
            u = k / per_segment
            pts.append((a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])))
    return pts


def bisect_decide(decide, hi, steps=60):
    """Smallest eps with decide(eps) true, by bisection over [0, hi]."""
    lo = 0.0
    if decide(lo):
        return lo
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if decide(mid):
            hi = mid
        else:
            lo = mid
    return hi


def brute_crossings(reds, blues, alpha, beta):
    """All (red, blue) index pairs whose order flips over [alpha, beta] (strict-below rule)."""
    out = []
    for i, r in enumerate(reds):
        for j, b in enumerate(blues):
            if b(alpha) < r(alpha) and not b(beta) < r(beta):
                out.append((i, j))
    return out
