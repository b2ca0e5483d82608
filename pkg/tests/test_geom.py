import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypfour import geom, isometry
from hypfour.errors import BoundaryError, DegenerateError, DomainError
from hypfour.geom import ORIGIN, HPoint

from conftest import random_point
from oracles import exp_map_oracle, integrate_poincare_radius

disk = st.tuples(st.floats(-0.85, 0.85), st.floats(-0.85, 0.85)).filter(lambda u: math.hypot(*u) < 0.85)


def test_mink_dot_basis():
    assert geom.mink_dot((1, 0, 0), (1, 0, 0)) == -1
    assert geom.mink_dot((0, 1, 0), (0, 1, 0)) == 1
    assert geom.mink_dot((1, 0, 0), (0, 1, 0)) == 0


def test_hdist_identity_and_symmetry(rng):
    p, q = random_point(rng), random_point(rng)
    assert geom.hdist(p, p) == 0.0
    assert geom.hdist(p, q) == pytest.approx(geom.hdist(q, p), abs=1e-15)


def test_hdist_radial_against_metric_integral():
    d = geom.hdist(ORIGIN, geom.from_poincare((0.5, 0.0)))
    assert d == pytest.approx(2 * math.atanh(0.5), abs=1e-13)
    assert d == pytest.approx(integrate_poincare_radius(0.5), abs=1e-10)
    assert d == pytest.approx(1.0986123, abs=1e-7)


def test_hdist_rejects_off_model_input():
    with pytest.raises(DomainError):
        geom.hdist((1.0, 0.0, 0.0), (0.5, 0.0, 0.0))


def test_from_poincare_values():
    assert geom.from_poincare((0.0, 0.0)) == HPoint(1.0, 0.0, 0.0)
    p = geom.from_poincare((0.5, 0.0))
    assert p == pytest.approx((5 / 3, 4 / 3, 0.0), abs=1e-15)
    assert geom.mink_dot(p, p) == pytest.approx(-1.0, abs=1e-14)


def test_poincare_round_trip():
    u = geom.to_poincare(geom.from_poincare((0.3, -0.4)))
    assert u == pytest.approx((0.3, -0.4), abs=1e-12)


@pytest.mark.parametrize("u", [(1.0, 0.0), (0.6, 0.8), (0.0, 1.0 - 1e-10), (2.0, 0.0)])
def test_from_poincare_rejects_ideal(u):
    with pytest.raises(BoundaryError):
        geom.from_poincare(u)


def test_hpoint_checks_sheet():
    with pytest.raises(DomainError):
        geom.hpoint(1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        geom.hpoint(-1.0, 0.0, 0.0)
    with pytest.raises(BoundaryError):
        geom.hpoint(math.inf, 0.0, 0.0)
    assert geom.hpoint(5 / 3, 4 / 3, 0.0) == pytest.approx((5 / 3, 4 / 3, 0.0))


def test_geodesic_normal_of_x1_axis():
    p, q = ORIGIN, geom.from_poincare((0.5, 0.0))
    n = geom.geodesic_normal(p, q).n
    assert abs(n[2]) == pytest.approx(1.0)
    assert n[0] == pytest.approx(0.0, abs=1e-15) and n[1] == pytest.approx(0.0, abs=1e-15)
    assert geom.mink_dot(p, n) == pytest.approx(0.0, abs=1e-15)
    assert geom.mink_dot(q, n) == pytest.approx(0.0, abs=1e-15)


def test_geodesic_normal_antisymmetric(rng):
    p, q = random_point(rng), random_point(rng)
    n1, n2 = geom.geodesic_normal(p, q).n, geom.geodesic_normal(q, p).n
    assert n1 == pytest.approx(tuple(-x for x in n2), abs=1e-14)
    assert geom.mink_dot(n1, n1) == pytest.approx(1.0)


def test_geodesic_normal_degenerate():
    with pytest.raises(DegenerateError):
        geom.geodesic_normal(ORIGIN, ORIGIN)


def test_side_of():
    p, q = ORIGIN, geom.from_poincare((0.5, 0.0))
    n = geom.geodesic_normal(p, q)
    assert geom.side_of(geom.from_poincare((-0.7, 0.0)), n) == 0
    flipped = geom.GeodesicNormal(tuple(-x for x in n.n))
    x = geom.from_poincare((0.1, 0.2))
    assert geom.side_of(x, flipped) == -geom.side_of(x, n) != 0


def test_side_of_upper_half_is_constant():
    rng = random.Random(7)
    n = geom.geodesic_normal(ORIGIN, geom.from_poincare((0.5, 0.0)))
    signs = set()
    for _ in range(100):
        r, t = 0.95 * rng.random(), rng.uniform(0.01, math.pi - 0.01)
        signs.add(geom.side_of(geom.from_poincare((r * math.cos(t), r * math.sin(t) + 1e-6)), n))
    assert len(signs) == 1 and 0 not in signs


def test_midpoint():
    q = geom.from_poincare((0.5, 0.0))
    m = geom.midpoint(ORIGIN, q)
    assert geom.hdist(m, ORIGIN) == pytest.approx(math.atanh(0.5), abs=1e-14)
    assert geom.hdist(m, q) == pytest.approx(math.atanh(0.5), abs=1e-14)
    with pytest.raises(DegenerateError):
        geom.midpoint(q, q)


def test_tangent_direction_contract(rng):
    for _ in range(50):
        p, q = random_point(rng), random_point(rng)
        t = geom.tangent_direction(p, q)
        assert geom.mink_dot(t.v, p) == pytest.approx(0.0, abs=1e-12)
        assert geom.mink_dot(t.v, t.v) == pytest.approx(1.0, abs=1e-12)
        landed = exp_map_oracle(p, t.v, geom.hdist(p, q))
        assert landed == pytest.approx(q, abs=1e-9)


def test_left_angle_straight_and_reversal():
    a, b = geom.from_poincare((-0.4, 0.0)), ORIGIN
    c = geom.from_poincare((0.6, 0.0))
    assert geom.left_angle(a, b, c) == pytest.approx(math.pi, abs=1e-15)
    with pytest.raises(DegenerateError):
        geom.left_angle(c, b, geom.from_poincare((0.3, 0.0)))


def test_left_angle_orientation():
    # counterclockwise triangle: every left angle is interior (< pi)
    a, b, c = (geom.from_poincare(u) for u in [(0.5, 0.0), (0.0, 0.5), (-0.5, 0.0)])
    assert geom.left_angle(a, b, c) < math.pi
    assert geom.left_angle(c, b, a) > math.pi


def test_equilateral_triangle_angles():
    r = 0.5
    pts = [geom.from_poincare((r * math.cos(t), r * math.sin(t))) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
    angles = [geom.left_angle(pts[i - 1], pts[i], pts[(i + 1) % 3]) for i in range(3)]
    assert max(angles) - min(angles) < 1e-13
    assert angles[0] < math.pi / 3
    assert sum(angles) < math.pi


def test_triangle_area_matches_defect(rng):
    for _ in range(200):
        a, b, c = (random_point(rng, 0.95) for _ in range(3))
        try:
            defect = math.pi - (geom.vertex_angle(c, a, b) + geom.vertex_angle(a, b, c) + geom.vertex_angle(b, c, a))
        except DegenerateError:
            continue
        assert geom.triangle_area(a, b, c) == pytest.approx(defect, abs=1e-11)


@settings(max_examples=200, deadline=None)
@given(disk, disk, disk)
def test_triangle_inequality(u, v, w):
    p, q, r = geom.from_poincare(u), geom.from_poincare(v), geom.from_poincare(w)
    assert geom.hdist(p, r) <= geom.hdist(p, q) + geom.hdist(q, r) + 1e-10


@settings(max_examples=200, deadline=None)
@given(disk, disk, disk)
def test_left_angles_of_reversed_path_sum_to_two_pi(u, v, w):
    a, b, c = geom.from_poincare(u), geom.from_poincare(v), geom.from_poincare(w)
    if min(geom.hdist(a, b), geom.hdist(b, c)) < 1e-6:
        return
    try:
        total = geom.left_angle(a, b, c) + geom.left_angle(c, b, a)
    except DegenerateError:
        return
    assert total == pytest.approx(2 * math.pi, abs=1e-9)


def test_isometry_invariance(rng):
    for _ in range(100):
        M = isometry.random_isometry(rng)
        a, b, c = (random_point(rng) for _ in range(3))
        ga, gb, gc = (isometry.apply(M, p) for p in (a, b, c))
        assert geom.hdist(ga, gb) == pytest.approx(geom.hdist(a, b), abs=1e-8)
        assert geom.left_angle(ga, gb, gc) == pytest.approx(geom.left_angle(a, b, c), abs=1e-8)
        m, gm = geom.midpoint(a, b), geom.midpoint(ga, gb)
        assert gm == pytest.approx(isometry.apply(M, m), abs=1e-8)
        n, gn = geom.geodesic_normal(a, b), geom.geodesic_normal(ga, gb)
        s, gs = geom.side_of(c, n), geom.side_of(gc, gn)
        assert s == gs


def test_drift_bounded_after_chained_operations(rng):
    p, q = random_point(rng), random_point(rng)
    for _ in range(100):
        p, q = geom.midpoint(p, q), geom.geodesic_flow(q, geom.tangent_direction(q, p).v, 0.3)
        for x in (p, q):
            assert abs(geom.mink_dot(x, x) + 1.0) < 1e-9
