import math
import random

import numpy as np
import pytest

from geofrechet.errors import NegativeEpsilon, PointOutsidePolygon
from geofrechet.geodesic import (
    BoundaryDistanceFunction,
    GeodesicDomain,
    build_funnel,
    eps_crossings,
    min_of,
    shortest_path,
)
from geofrechet.geometry import segment_inside, triangulate, validate_polygon

from instances import L_SHAPE, UNIT_SQUARE, U_NOTCH, comb_polygon, convex_polygon, random_interior_point, star_polygon
from oracles import VisibilityOracle


@pytest.fixture(scope="module")
def l_shape():
    return GeodesicDomain(validate_polygon(L_SHAPE))


def _lerp(c, d, t):
    return (c[0] + t * (d[0] - c[0]), c[1] + t * (d[1] - c[1]))


def test_square_path_is_straight():
    poly = validate_polygon(UNIT_SQUARE)
    path = shortest_path(poly, triangulate(poly), (0.1, 0.1), (0.9, 0.9))
    assert path.vertices == ((0.1, 0.1), (0.9, 0.9))
    assert path.length == pytest.approx(math.sqrt(2 * 0.8 ** 2), abs=1e-15)


def test_l_shape_paths(l_shape):
    # this pair sees each other: the segment passes below the reflex corner
    straight = l_shape.shortest_path((0.0, 1.5), (1.5, 0.5))
    assert len(straight.vertices) == 2
    assert straight.length == pytest.approx(math.sqrt(3.25), rel=1e-15)
    bent = l_shape.shortest_path((0.0, 1.5), (1.5, 0.9))
    assert bent.vertices == ((0.0, 1.5), (1.0, 1.0), (1.5, 0.9))
    assert bent.length == pytest.approx(math.sqrt(1.25) + math.sqrt(0.26), rel=1e-15)
    oracle = VisibilityOracle(l_shape.polygon)
    assert bent.length == pytest.approx(oracle.distance((0.0, 1.5), (1.5, 0.9)), rel=1e-12)


def test_same_point(l_shape):
    path = l_shape.shortest_path((0.5, 0.5), (0.5, 0.5))
    assert path.vertices == ((0.5, 0.5),)
    assert path.length == 0.0


def test_outside_point_rejected(l_shape):
    with pytest.raises(PointOutsidePolygon):
        l_shape.shortest_path((0.5, 0.5), (1.5, 1.5))


def test_path_through_u_notch():
    dom = GeodesicDomain(validate_polygon(U_NOTCH))
    path = dom.shortest_path((0.5, 2.5), (2.5, 2.5))
    assert path.vertices == ((0.5, 2.5), (1.0, 1.0), (2.0, 1.0), (2.5, 2.5))
    assert path.length == pytest.approx(2 * math.sqrt(0.25 + 2.25) + 1.0, rel=1e-15)
    # reversed query gives the reversed path
    back = dom.shortest_path((2.5, 2.5), (0.5, 2.5))
    assert back.vertices == tuple(reversed(path.vertices))


def test_path_properties_random():
    rng = random.Random(3)
    for trial in range(15):
        poly = star_polygon(rng, rng.randint(5, 30)) if trial % 2 else comb_polygon(rng, rng.randint(1, 5))
        dom = GeodesicDomain(poly)
        corners = set(poly.vertices)
        for _ in range(10):
            a, b = random_interior_point(rng, poly), random_interior_point(rng, poly)
            path = dom.shortest_path(a, b)
            assert all(v in corners for v in path.vertices[1:-1])
            assert all(segment_inside(poly, u, v) for u, v in zip(path.vertices, path.vertices[1:]))
            assert path.length == pytest.approx(
                sum(math.dist(u, v) for u, v in zip(path.vertices, path.vertices[1:])), rel=1e-14)


def test_matches_visibility_oracle():
    rng = random.Random(11)
    for trial in range(12):
        poly = star_polygon(rng, rng.randint(4, 30)) if trial % 2 else comb_polygon(rng, rng.randint(1, 5))
        dom = GeodesicDomain(poly)
        oracle = VisibilityOracle(poly)
        for _ in range(15):
            a, b = random_interior_point(rng, poly), random_interior_point(rng, poly)
            assert dom.distance(a, b) == pytest.approx(oracle.distance(a, b), rel=1e-9)


def test_triangle_inequality():
    rng = random.Random(17)
    poly = comb_polygon(rng, 4)
    dom = GeodesicDomain(poly)
    pts = [random_interior_point(rng, poly) for _ in range(60)]
    for _ in range(500):
        a, b, c = rng.sample(pts, 3)
        assert dom.distance(a, c) <= dom.distance(a, b) + dom.distance(b, c) + 1e-12


def test_convex_polygon_is_euclidean():
    rng = random.Random(23)
    for _ in range(10):
        poly = convex_polygon(rng, rng.randint(3, 20))
        dom = GeodesicDomain(poly)
        for _ in range(20):
            a, b = random_interior_point(rng, poly), random_interior_point(rng, poly)
            assert dom.distance(a, b) == pytest.approx(math.dist(a, b), rel=1e-12, abs=1e-15)


def test_funnel_convex():
    poly = validate_polygon([(-2, -2), (2, -2), (2, 2), (-2, 2)])
    f = build_funnel(poly, triangulate(poly), (0.0, 0.0), ((-1.0, 1.0), (1.0, 1.0)))
    assert f.apex == (0.0, 0.0)
    assert f.chain_c == ((0.0, 0.0), (-1.0, 1.0))
    assert f.chain_d == ((0.0, 0.0), (1.0, 1.0))


def test_funnel_l_shape(l_shape):
    f = l_shape.funnel((0.0, 1.5), (1.5, 0.9), (1.9, 0.9))
    assert f.apex == (1.0, 1.0)
    assert f.chain_c[0] == f.chain_d[0] == (1.0, 1.0)
    assert f.lengths_c[0] == pytest.approx(math.sqrt(1.25))
    F = l_shape.boundary_function((0.0, 1.5), (1.5, 0.9), (1.9, 0.9))
    assert F.vertex[0] == (1.0, 1.0)
    assert F.L[0] == pytest.approx(math.sqrt(1.25))


def test_funnel_degenerate_segment(l_shape):
    f = l_shape.funnel((0.0, 1.5), (1.5, 0.9), (1.5, 0.9))
    assert f.chain_c == f.chain_d
    F = l_shape.boundary_function((0.0, 1.5), (1.5, 0.9), (1.5, 0.9))
    for t in np.linspace(0, 1, 11):
        assert F(t) == pytest.approx(F(0.0), abs=1e-15)


def test_convex_distance_function():
    F = BoundaryDistanceFunction.point_segment((0.0, 0.0), (-1.0, 1.0), (1.0, 1.0))
    assert len(F) == 1
    for t in np.linspace(0, 1, 21):
        assert F(t) == pytest.approx(math.sqrt((2 * t - 1) ** 2 + 1), abs=1e-15)
    assert min_of(F) == (0.5, 1.0)
    t1, t2 = eps_crossings(F, math.sqrt(2))
    assert t1 == pytest.approx(0.0, abs=1e-12) and t2 == pytest.approx(1.0, abs=1e-12)
    assert eps_crossings(F, 0.5) is None
    assert eps_crossings(F, 1.0) == (0.5, 0.5)
    with pytest.raises(NegativeEpsilon):
        eps_crossings(F, -0.1)


def test_monotone_increasing_minimum():
    F = BoundaryDistanceFunction.point_segment((0.0, 0.0), (1.0, 0.0), (2.0, 0.0))
    assert min_of(F) == (0.0, 1.0)
    assert eps_crossings(F, 1.5) == (0.0, 0.5)


def test_l_shape_min_matches_dense_sampling(l_shape):
    F = l_shape.boundary_function((0.0, 1.5), (1.5, 0.9), (1.9, 0.2))
    ts = np.linspace(0, 1, 100001)
    vals = [F(t) for t in ts]
    k = int(np.argmin(vals))
    t_star, v_star = min_of(F)
    assert abs(t_star - ts[k]) <= 1e-5 + 1e-6
    assert v_star <= vals[k] + 1e-12


def _random_functions(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        poly = star_polygon(rng, rng.randint(5, 30)) if len(out) % 2 else comb_polygon(rng, rng.randint(1, 5))
        dom = GeodesicDomain(poly)
        oracle = VisibilityOracle(poly)
        for _ in range(5):
            p = random_interior_point(rng, poly)
            c = random_interior_point(rng, poly)
            for _ in range(100):
                d = random_interior_point(rng, poly)
                if d != c and segment_inside(poly, c, d):
                    break
            else:
                continue
            out.append((dom, oracle, p, c, d, dom.boundary_function(p, c, d)))
    return out[:count], rng


def test_distance_function_structure_and_values():
    funcs, _ = _random_functions(31, 40)
    for dom, oracle, p, c, d, F in funcs:
        arcs = F.arcs
        assert arcs[0][0] == 0.0 and arcs[-1][1] == 1.0
        for (lo0, hi0, L0, v0), (lo1, hi1, L1, v1) in zip(arcs, arcs[1:]):
            assert hi0 == lo1
            q = _lerp(c, d, hi0)
            assert L0 + math.dist(q, v0) == pytest.approx(L1 + math.dist(q, v1), abs=1e-9)
        f = dom.funnel(p, c, d)
        assert len(arcs) <= len(f.chain_c) + len(f.chain_d) + 1
        for t in np.linspace(0, 1, 41):
            assert F(t) == pytest.approx(oracle.distance(p, _lerp(c, d, t)), rel=1e-9, abs=1e-12)


def test_bitonic_and_single_free_run():
    funcs, rng = _random_functions(37, 60)
    ts = np.linspace(0, 1, 1001)
    for dom, oracle, p, c, d, F in funcs:
        vals = [F(t) for t in ts]
        rising = False
        for a, b in zip(vals, vals[1:]):
            if b > a + 1e-12:
                rising = True
            elif b < a - 1e-12:
                assert not rising
        eps = rng.uniform(F.min_val, max(vals) * 1.05)
        free = [i for i, v in enumerate(vals) if v <= eps]
        iv = F.crossings(eps)
        if not free:
            continue
        assert free == list(range(free[0], free[-1] + 1))
        assert iv[0] <= ts[free[0]] + 1e-12 and ts[free[-1]] <= iv[1] + 1e-12
        assert iv[0] >= ts[free[0]] - 1e-3 - 1e-12 and iv[1] <= ts[free[-1]] + 1e-3 + 1e-12
        assert F(iv[0]) == pytest.approx(eps, abs=1e-9) or iv[0] == 0.0
        assert F(iv[1]) == pytest.approx(eps, abs=1e-9) or iv[1] == 1.0
