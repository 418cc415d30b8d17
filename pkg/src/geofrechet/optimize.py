"""Exact Fréchet distance by randomized critical-value search.

Candidate values of epsilon are where the decision answer can flip:

* endpoint distances ``d(A(0), B(0))`` and ``d(A(1), B(1))`` (type a),
* minima of the cell-boundary distance functions, where a free interval is
  born (type b),
* crossings of the lower endpoint of one boundary's free interval with the
  upper endpoint of another boundary in the same row or column (type c).

Type a/b values are sorted and binary searched with the decision procedure.
The type c crossings are never enumerated; instead, each round counts them per
row with the red-blue slab counter (lower endpoints are non-increasing in
epsilon, upper endpoints non-decreasing), samples one crossing per row, moves
every crossing of the busiest lower endpoint into a global pool, and probes
the pool median and the count-weighted median of the samples.  Each probe
shrinks the slab ``(alpha, beta]`` that holds the answer.  Columns are then
handled the same way.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import EmptyInput, NonTermination
from .freespace import FreeSpace
from .geodesic import BoundaryDistanceFunction, GeodesicDomain
from .geometry import SimplePolygon
from .redblue import BLUE, RED, MonotoneCurve, count, max_red_index, random_intersection

DEFAULT_TOL = 1e-12


@dataclass
class BoundaryCurve:
    """One endpoint of a boundary's free interval as a function of epsilon.

    ``kind`` is ``"lower"`` (non-increasing in epsilon) or ``"upper"``
    (non-decreasing).  Below ``birth`` the interval does not exist yet and the
    curve is held at the position where it will appear.
    """

    kind: str
    i: int
    j: int
    side: str
    F: BoundaryDistanceFunction

    @property
    def birth(self) -> float:
        return self.F.min_val

    def eval(self, eps: float) -> float:
        F = self.F
        if eps < F.min_val:
            return F.min_t
        return F.lower(eps) if self.kind == "lower" else F.upper(eps)


@dataclass
class FrechetResult:
    epsilon_star: float
    resolving_kind: str
    iterations: int
    decision_calls: int
    tolerance: float = DEFAULT_TOL
    trace: List[dict] = field(default_factory=list, repr=False, compare=False)


def type_a_values(A, B, polygon: Optional[SimplePolygon] = None,
                  space: Optional[FreeSpace] = None) -> Tuple[float, float]:
    fs = space if space is not None else FreeSpace(A, B, polygon)
    return fs.start_dist, fs.end_dist


def type_b_values(A, B, polygon: Optional[SimplePolygon] = None,
                  space: Optional[FreeSpace] = None) -> List[float]:
    fs = space if space is not None else FreeSpace(A, B, polygon)
    return [F.min_val for F in fs.all_functions()]


def resolve_sorted_values(values: Sequence[float], decide: Callable[[float], bool]) -> Tuple[float, float]:
    """Binary search sorted candidates for the first one that decides true.

    Returns ``(alpha, beta)`` with ``decide(alpha)`` false and ``beta`` the
    smallest true candidate, or ``(v, v)`` when the smallest candidate is
    already true.
    """
    values = sorted(values)
    if not values:
        raise EmptyInput("no candidate values")
    if decide(values[0]):
        return values[0], values[0]
    lo, hi = 0, len(values) - 1
    if not decide(values[hi]):
        raise ValueError("largest candidate does not satisfy the decision problem")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if decide(values[mid]):
            hi = mid
        else:
            lo = mid
    return values[lo], values[hi]


def curve_intersection(a, b, slab: Tuple[float, float], tol: Optional[float] = None) -> Optional[float]:
    """Where a decreasing ``a`` meets an increasing ``b`` inside the slab.

    The root is bracketed with ``a > b`` on the left and ``a <= b`` on the
    right and refined (Illinois steps with a bisection safeguard) until the
    bracket is narrower than ``tol``; the right end of the bracket is returned,
    so the returned value is never below the true crossing by more than
    rounding.  None when ``a - b`` does not change sign over the slab.
    """
    fa = a.eval if hasattr(a, "eval") else a
    fb = b.eval if hasattr(b, "eval") else b
    lo, hi = slab
    if tol is None:
        tol = DEFAULT_TOL * max(1.0, abs(hi))
    glo = fa(lo) - fb(lo)
    if not glo > 0:
        return None
    ghi = fa(hi) - fb(hi)
    if ghi > 0:
        return None
    side = 0
    while hi - lo > tol:
        width = hi - lo
        x = hi - ghi * (hi - lo) / (ghi - glo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        gx = fa(x) - fb(x)
        if gx > 0:
            lo, glo = x, gx
            if side == -1:
                ghi *= 0.5
            side = -1
        else:
            hi, ghi = x, gx
            if side == 1:
                glo *= 0.5
            side = 1
        if hi - lo > 0.5 * width:
            m = 0.5 * (lo + hi)
            if not lo < m < hi:
                break
            gm = fa(m) - fb(m)
            if gm > 0:
                lo, glo = m, gm
            else:
                hi, ghi = m, gm
            side = 0
    return hi


def weighted_median(values: Sequence[float], weights: Sequence[float]) -> float:
    """Smallest value whose cumulative weight reaches half of the total."""
    if not values:
        raise EmptyInput("weighted median of nothing")
    if len(values) != len(weights):
        raise ValueError("values and weights differ in length")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    pairs = sorted(zip(values, weights))
    half = 0.5 * sum(weights)
    acc = 0.0
    for v, w in pairs:
        acc += w
        if acc >= half:
            return v
    return pairs[-1][0]  # pragma: no cover - float slack only


def _rng(seed: int, phase: int, iteration: int, group: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(phase, iteration, group))
    return np.random.Generator(np.random.Philox(ss))


class _Search:
    def __init__(self, space: FreeSpace, seed: int, tol: float, record: bool):
        self.fs = space
        self.seed = int(seed)
        self.tol = tol
        self.record = record
        self.trace: List[dict] = []
        self.iterations = 0
        self.decisions = 0
        n = max(space.n_a, space.n_b) + 1
        self.guard = n * (space.n_a + space.n_b) + 16

    def decide(self, eps: float) -> bool:
        self.decisions += 1
        return self.fs.decide(eps)

    def tau(self, x: float) -> float:
        return self.tol * max(1.0, abs(x))

    def run(self) -> FrechetResult:
        fs = self.fs
        type_a = (fs.start_dist, fs.end_dist)
        floor = max(type_a)
        type_b = [F.min_val for F in fs.all_functions()]
        # with every boundary fully free the decision is trivially true
        ceiling = max([floor] + [max(F(0.0), F(1.0)) for F in fs.all_functions()])
        candidates = sorted({v for v in list(type_a) + type_b + [ceiling] if v >= floor})
        alpha, beta = resolve_sorted_values(candidates, self.decide)
        if alpha == beta:
            return self._result(beta, "a" if beta in type_a else "b")
        self.alpha, self.beta = alpha, beta
        self._trace("types a/b", [], 0)

        rows = [self._group(fs.vertical, j, "vertical", along_rows=True) for j in range(fs.n_b)]
        self._phase(rows, phase=0)
        cols = [self._group(fs.horizontal, i, "horizontal", along_rows=False) for i in range(fs.n_a)]
        self._phase(cols, phase=1)

        kind = "b" if self.beta in set(type_b) else ("a" if self.beta in type_a else "c")
        return self._result(self.beta, kind)

    def _result(self, eps, kind):
        return FrechetResult(eps, kind, self.iterations, self.decisions, self.tol, self.trace)

    def _trace(self, step, pool, batch):
        if self.record:
            self.trace.append({"step": step, "alpha": self.alpha, "beta": self.beta,
                               "pool": len(pool), "batch": batch,
                               "pool_min": min(pool, default=None), "pool_max": max(pool, default=None)})

    def _group(self, grid, index, side, along_rows):
        """Red (lower) and blue (upper) curves of one row or column."""
        if along_rows:
            fns = [(k, index, grid[k][index]) for k in range(len(grid))]
        else:
            fns = [(index, k, grid[index][k]) for k in range(len(grid[index]))]
        reds, blues = [], []
        for n, (i, j, F) in enumerate(fns):
            if F.min_val > self.alpha:
                # born at or after beta: blocked throughout the slab
                continue
            lo = BoundaryCurve("lower", i, j, side, F)
            hi = BoundaryCurve("upper", i, j, side, F)
            reds.append(MonotoneCurve(n, RED, lo.eval, self._intersector(lo), lo))
            blues.append(MonotoneCurve(n, BLUE, hi.eval, None, hi))
        return reds, blues

    def _intersector(self, curve):
        def intersect(other, alpha, beta):
            return curve_intersection(curve, other.payload, (alpha, beta), self.tau(beta))
        return intersect

    def _phase(self, groups, phase):
        pool: List[float] = []
        it = 0
        while True:
            self.iterations += 1
            if self.iterations > self.guard:
                raise NonTermination(f"no convergence after {self.guard} iterations")
            right = self.beta - self.tau(self.beta)
            thetas, weights = [], []
            batch = 0
            if right > self.alpha:
                for g, (reds, blues) in enumerate(groups):
                    if not reds or not blues:
                        continue
                    ctr = count(reds, blues, self.alpha, right, check=False)
                    if ctr.total == 0:
                        continue
                    _, _, theta = random_intersection(ctr, _rng(self.seed, phase, it, g))
                    if theta is not None:
                        thetas.append(theta)
                        weights.append(ctr.total)
                    busiest = max_red_index(ctr)
                    for bi in ctr.crossing_blues(busiest):
                        x = ctr.crossing(busiest, bi)[2]
                        if x is not None:
                            pool.append(x)
                            batch += 1
                    del reds[busiest]
            if not thetas and not pool:
                self.iterations -= 1
                break
            probes = []
            if pool:
                probes.append(statistics.median_low(pool))
            if thetas:
                probes.append(weighted_median(thetas, weights))
            for v in probes:
                if self.alpha < v < self.beta:
                    if self.decide(v):
                        self.beta = v
                    else:
                        self.alpha = v
            cut = self.beta - self.tau(self.beta)
            pool = [v for v in pool if self.alpha < v < cut]
            self._trace("rows" if phase == 0 else "columns", pool, batch)
            it += 1


def frechet(space: FreeSpace, seed: int = 0, tol: float = DEFAULT_TOL,
            record: bool = False) -> FrechetResult:
    """Fréchet distance for a prepared :class:`FreeSpace` (geodesic or Euclidean)."""
    return _Search(space, seed, tol, record).run()


def frechet_geodesic(A, B, polygon: SimplePolygon, seed: int = 0, tol: float = DEFAULT_TOL,
                     domain: Optional[GeodesicDomain] = None, record: bool = False) -> FrechetResult:
    return frechet(FreeSpace(A, B, polygon, domain=domain), seed, tol, record)


def frechet_euclidean(A, B, seed: int = 0, tol: float = DEFAULT_TOL,
                      record: bool = False) -> FrechetResult:
    return frechet(FreeSpace(A, B), seed, tol, record)
