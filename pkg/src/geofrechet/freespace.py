"""Free-space diagrams and the Fréchet decision procedure.

Curve ``A`` runs along the horizontal axis of the diagram and ``B`` along the
vertical one.  The vertical boundary ``(i, j)`` is the segment ``s = i``,
``t in [j, j + 1]``; its free interval comes from the distance function of
``A[i]`` against segment ``B[j] B[j+1]``.  Horizontal boundary ``(i, j)`` is
``t = j``, ``s in [i, i + 1]`` with ``B[j]`` against ``A[i] A[i+1]``.

Intervals are ``(lo, hi)`` tuples in local ``[0, 1]`` coordinates, or ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import NegativeEpsilon
from .geodesic import BoundaryDistanceFunction, GeodesicDomain
from .geometry import Point, PolygonalCurve, SimplePolygon, dist

Interval = Optional[Tuple[float, float]]


def curve_vertices(curve) -> List[Point]:
    """Vertex list of a curve; a single point becomes a zero-length segment."""
    if isinstance(curve, PolygonalCurve):
        pts = list(curve.vertices)
    else:
        pts = [(float(x), float(y)) for x, y in curve]
    if len(pts) == 1:
        pts = pts * 2
    return pts


def euclidean_boundary(p: Point, c: Point, d: Point) -> BoundaryDistanceFunction:
    return BoundaryDistanceFunction.point_segment(p, c, d)


def propagate_cell(left_reach: Interval, bottom_reach: Interval,
                   free_left: Interval, free_bottom: Interval,
                   free_right: Interval, free_top: Interval) -> Tuple[Interval, Interval]:
    """Reachable parts of a cell's right and top boundaries.

    Free space inside a cell is connected and monotone in both directions, so
    the usual rule applies: anything reached on the bottom opens the whole free
    right side, otherwise the right side is cut below the lowest reachable
    point of the left side (and symmetrically for the top).
    """
    if free_right is None:
        right = None
    elif bottom_reach is not None:
        right = free_right
    elif left_reach is not None and left_reach[0] <= free_right[1]:
        right = (max(free_right[0], left_reach[0]), free_right[1])
    else:
        right = None

    if free_top is None:
        top = None
    elif left_reach is not None:
        top = free_top
    elif bottom_reach is not None and bottom_reach[0] <= free_top[1]:
        top = (max(free_top[0], bottom_reach[0]), free_top[1])
    else:
        top = None
    return right, top


def sweep(n_a: int, n_b: int,
          vertical: Callable[[int, int], Interval],
          horizontal: Callable[[int, int], Interval],
          start_free: bool, end_free: bool) -> bool:
    """Row-by-row reachability sweep keeping only one row of state.

    ``vertical(i, j)`` / ``horizontal(i, j)`` return free intervals and are
    called once per boundary.
    """
    if not (start_free and end_free):
        return False

    # bottom edge of the diagram: reachable only by sliding right from the start
    bottom: List[Interval] = []
    open_run = True
    for i in range(n_a):
        h = horizontal(i, 0)
        if open_run and h is not None and h[0] == 0.0:
            bottom.append(h)
            open_run = h[1] == 1.0
        else:
            bottom.append(None)
            open_run = False

    left_open = True
    for j in range(n_b):
        v = vertical(0, j)
        if left_open and v is not None and v[0] == 0.0:
            left = v
            left_open = v[1] == 1.0
        else:
            left = None
            left_open = False
        if j == 0 and left is None:
            left = (0.0, 0.0)  # the start corner itself
        top_row: List[Interval] = []
        for i in range(n_a):
            if i == n_a - 1 and j == n_b - 1:
                # the end corner is free and the free space of a cell is
                # staircase-connected, so any reachable entry reaches it
                return left is not None or bottom[i] is not None
            right, top = propagate_cell(
                left, bottom[i], None, None,
                vertical(i + 1, j),
                horizontal(i, j + 1) if j + 1 < n_b else None,
            )
            top_row.append(top)
            left = right
        bottom = top_row
    return False  # pragma: no cover - loop always returns at the last cell


class FreeSpace:
    """All cell-boundary distance functions of one curve pair, built once.

    Distance functions do not depend on epsilon, so decisions at many
    epsilons (as the optimizer needs) only re-solve the per-arc quadratics.
    """

    def __init__(self, A, B, polygon: Optional[SimplePolygon] = None,
                 domain: Optional[GeodesicDomain] = None):
        self.A = curve_vertices(A)
        self.B = curve_vertices(B)
        if domain is None and polygon is not None:
            domain = GeodesicDomain(polygon)
        self.domain = domain
        if domain is None:
            self.boundary_fn = euclidean_boundary
            self.point_dist = dist
        else:
            self.boundary_fn = domain.boundary_function
            self.point_dist = domain.distance
        self.n_a = len(self.A) - 1
        self.n_b = len(self.B) - 1
        A, B, bf = self.A, self.B, self.boundary_fn
        self.vertical = [[bf(A[i], B[j], B[j + 1]) for j in range(self.n_b)]
                         for i in range(self.n_a + 1)]
        self.horizontal = [[bf(B[j], A[i], A[i + 1]) for j in range(self.n_b + 1)]
                           for i in range(self.n_a)]
        self.start_dist = self.point_dist(A[0], B[0])
        self.end_dist = self.point_dist(A[-1], B[-1])
        self.decisions = 0

    @property
    def geodesic(self) -> bool:
        return self.domain is not None

    def all_functions(self):
        for row in self.vertical:
            yield from row
        for row in self.horizontal:
            yield from row

    def decide(self, eps: float) -> bool:
        if eps < 0:
            raise NegativeEpsilon(f"epsilon must be non-negative, got {eps}")
        self.decisions += 1
        V, H = self.vertical, self.horizontal
        return sweep(
            self.n_a, self.n_b,
            lambda i, j: V[i][j].crossings(eps),
            lambda i, j: H[i][j].crossings(eps),
            self.start_dist <= eps, self.end_dist <= eps,
        )

    def intervals(self, eps: float) -> "BoundaryIntervals":
        return BoundaryIntervals(
            [[F.crossings(eps) for F in row] for row in self.vertical],
            [[F.crossings(eps) for F in row] for row in self.horizontal],
        )

    def reachability(self, eps: float) -> Tuple["BoundaryIntervals", "BoundaryIntervals"]:
        """Free and reachable intervals of every boundary (full diagram)."""
        free = self.intervals(eps)
        n_a, n_b = self.n_a, self.n_b
        rv = [[None] * n_b for _ in range(n_a + 1)]
        rh = [[None] * (n_b + 1) for _ in range(n_a)]
        if self.start_dist <= eps:
            open_run = True
            for i in range(n_a):
                h = free.horizontal[i][0]
                if open_run and h is not None and h[0] == 0.0:
                    rh[i][0] = h
                    open_run = h[1] == 1.0
                else:
                    open_run = False
            open_run = True
            for j in range(n_b):
                v = free.vertical[0][j]
                if open_run and v is not None and v[0] == 0.0:
                    rv[0][j] = v
                    open_run = v[1] == 1.0
                else:
                    open_run = False
            for j in range(n_b):
                for i in range(n_a):
                    right, top = propagate_cell(
                        rv[i][j], rh[i][j], None, None,
                        free.vertical[i + 1][j], free.horizontal[i][j + 1])
                    rv[i + 1][j] = right
                    rh[i][j + 1] = top
        return free, BoundaryIntervals(rv, rh)


@dataclass
class CellBoundaryInterval:
    i: int
    j: int
    side: str
    interval: Interval


@dataclass
class BoundaryIntervals:
    """Intervals indexed like :class:`FreeSpace` boundaries.

    ``vertical[i][j]`` is shared by the right side of cell ``(i-1, j)`` and
    the left side of cell ``(i, j)``.
    """

    vertical: List[List[Interval]]
    horizontal: List[List[Interval]]

    def cell(self, i: int, j: int) -> dict:
        return {
            "left": self.vertical[i][j],
            "right": self.vertical[i + 1][j],
            "bottom": self.horizontal[i][j],
            "top": self.horizontal[i][j + 1],
        }

    def records(self) -> List[CellBoundaryInterval]:
        out = []
        for i, row in enumerate(self.vertical):
            for j, iv in enumerate(row):
                out.append(CellBoundaryInterval(i, j, "vertical", iv))
        for i, row in enumerate(self.horizontal):
            for j, iv in enumerate(row):
                out.append(CellBoundaryInterval(i, j, "horizontal", iv))
        return out


def cell_boundaries(A, B, polygon: Optional[SimplePolygon], eps: float) -> BoundaryIntervals:
    return FreeSpace(A, B, polygon).intervals(eps)


def decide(A, B, polygon: Optional[SimplePolygon], eps: float,
           domain: Optional[GeodesicDomain] = None) -> bool:
    """Is the (geodesic, or Euclidean when ``polygon`` is None) Fréchet distance <= eps?

    Boundary functions are built lazily while sweeping, two rows at a time.
    """
    if eps < 0:
        raise NegativeEpsilon(f"epsilon must be non-negative, got {eps}")
    A = curve_vertices(A)
    B = curve_vertices(B)
    if domain is None and polygon is not None:
        domain = GeodesicDomain(polygon)
    if domain is None:
        bf, pd = euclidean_boundary, dist
    else:
        bf, pd = domain.boundary_function, domain.distance
    return sweep(
        len(A) - 1, len(B) - 1,
        lambda i, j: bf(A[i], B[j], B[j + 1]).crossings(eps),
        lambda i, j: bf(B[j], A[i], A[i + 1]).crossings(eps),
        pd(A[0], B[0]) <= eps, pd(A[-1], B[-1]) <= eps,
    )

