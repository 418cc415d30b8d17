"""Counting, reporting and sampling red-blue crossings inside a slab.

Red curves are non-increasing and blue curves non-decreasing on
``[alpha, beta]``, so a red and a blue cross at most once.  A blue is *below*
a red at x when ``blue(x) < red(x)``.  Every blue below a red at ``beta`` was
already below it at ``alpha``, hence the number of crossings of a red is::

    below(alpha) - below(beta)

and a crossing is counted exactly when the pair is strictly ordered at
``alpha`` and not at ``beta``, i.e. it happens in ``(alpha, beta]``.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import EmptySlab, MonotonicityViolation

RED = "red"
BLUE = "blue"


@dataclass
class MonotoneCurve:
    """A curve supplied through its evaluation contract.

    ``intersect_with(other, alpha, beta)`` returns the abscissa of the (at
    most one) crossing with a curve of the opposite colour in the slab, or None.
    """

    id: int
    color: str
    eval: Callable[[float], float]
    intersect_with: Optional[Callable[["MonotoneCurve", float, float], Optional[float]]] = None
    payload: object = field(default=None, repr=False, compare=False)

    def __call__(self, x: float) -> float:
        return self.eval(x)


def chebyshev_points(alpha: float, beta: float, n: int = 17) -> List[float]:
    mid, half = 0.5 * (alpha + beta), 0.5 * (beta - alpha)
    pts = [mid - half * math.cos(math.pi * k / (n - 1)) for k in range(n)]
    pts[0], pts[-1] = alpha, beta
    return pts


def check_monotone(curve: MonotoneCurve, alpha: float, beta: float, samples: int = 17) -> None:
    ys = [curve.eval(x) for x in chebyshev_points(alpha, beta, samples)]
    if not all(math.isfinite(y) for y in ys):
        raise MonotonicityViolation(f"curve {curve.id} is not finite on the slab")
    if curve.color == RED:
        bad = any(b > a for a, b in zip(ys, ys[1:]))
    else:
        bad = any(b < a for a, b in zip(ys, ys[1:]))
    if bad:
        raise MonotonicityViolation(f"{curve.color} curve {curve.id} is not monotone on the slab")


class RedBlueCounter:
    """Per-red crossing counts over a slab plus what is needed to sample them."""

    def __init__(self, reds: Sequence[MonotoneCurve], blues: Sequence[MonotoneCurve],
                 alpha: float, beta: float):
        self.reds = list(reds)
        self.blues = list(blues)
        self.alpha = alpha
        self.beta = beta
        self.red_alpha = [r.eval(alpha) for r in self.reds]
        self.red_beta = [r.eval(beta) for r in self.reds]
        self.blue_alpha = [b.eval(alpha) for b in self.blues]
        self.blue_beta = [b.eval(beta) for b in self.blues]
        # blues in increasing order of their value at alpha
        self.blue_order = sorted(range(len(self.blues)), key=lambda k: self.blue_alpha[k])
        sorted_alpha = [self.blue_alpha[k] for k in self.blue_order]
        sorted_beta = sorted(self.blue_beta)
        self.below_alpha = [bisect_left(sorted_alpha, y) for y in self.red_alpha]
        self.below_beta = [bisect_left(sorted_beta, y) for y in self.red_beta]
        self.counts = [a - b for a, b in zip(self.below_alpha, self.below_beta)]
        if any(c < 0 for c in self.counts):
            raise MonotonicityViolation("a blue moved from above to below a red")
        self.total = sum(self.counts)
        self._prefix = list(accumulate(self.counts))
        best = 0
        for k in range(1, len(self.counts)):
            if (self.counts[k] > self.counts[best]
                    or (self.counts[k] == self.counts[best] and self.reds[k].id < self.reds[best].id)):
                best = k
        self._max_index = best if self.reds else None

    def __len__(self):
        return self.total

    def crossing_blues(self, red_index: int) -> List[int]:
        """Indices of the blues crossing a red, in increasing order of value at alpha."""
        r_beta = self.red_beta[red_index]
        out = []
        for k in self.blue_order[: self.below_alpha[red_index]]:
            if not self.blue_beta[k] < r_beta:
                out.append(k)
        return out

    def crossing(self, red_index: int, blue_index: int) -> Tuple[int, int, float]:
        r = self.reds[red_index]
        b = self.blues[blue_index]
        if r.intersect_with is not None:
            x = r.intersect_with(b, self.alpha, self.beta)
        else:
            x = bisect_crossing(r.eval, b.eval, self.alpha, self.beta)
        return r.id, b.id, x


def bisect_crossing(red, blue, alpha, beta, tol=1e-13):
    """Crossing abscissa of a decreasing red and increasing blue by bisection."""
    lo, hi = alpha, beta
    if not blue(lo) < red(lo):
        return None
    if blue(hi) < red(hi):
        return None
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if blue(mid) < red(mid):
            lo = mid
        else:
            hi = mid
    return hi


def count(reds: Sequence[MonotoneCurve], blues: Sequence[MonotoneCurve],
          alpha: float, beta: float, check: bool = True) -> RedBlueCounter:
    """Count red-blue crossings in the slab in O(N log N) (plus curve evaluations)."""
    if check:
        for c in reds:
            check_monotone(c, alpha, beta)
        for c in blues:
            check_monotone(c, alpha, beta)
    return RedBlueCounter(reds, blues, alpha, beta)


def report(counter: RedBlueCounter) -> List[Tuple[int, int, float]]:
    """Every crossing as ``(red id, blue id, x)``."""
    out = []
    for ri, c in enumerate(counter.counts):
        if c:
            for bi in counter.crossing_blues(ri):
                out.append(counter.crossing(ri, bi))
    return out


def _draw(rng, n: int) -> int:
    if hasattr(rng, "integers"):
        return int(rng.integers(0, n))
    return rng.randrange(n)


def random_intersection(counter: RedBlueCounter, rng) -> Tuple[int, int, float]:
    """A crossing chosen uniformly at random among all ``counter.total`` of them."""
    if counter.total == 0:
        raise EmptySlab("no red-blue crossings in the slab")
    u = _draw(rng, counter.total)
    ri = bisect_right(counter._prefix, u)
    rank = u - (counter._prefix[ri - 1] if ri else 0)
    bi = counter.crossing_blues(ri)[rank]
    return counter.crossing(ri, bi)


def max_red(counter: RedBlueCounter) -> Optional[int]:
    """Id of the red with the most crossings (smallest id on ties)."""
    if counter._max_index is None:
        return None
    return counter.reds[counter._max_index].id


def max_red_index(counter: RedBlueCounter) -> Optional[int]:
    return counter._max_index
