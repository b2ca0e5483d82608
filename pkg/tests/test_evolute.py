import math

import pytest

from hypfour import geom
from hypfour.circumcircle import circle_spread
from hypfour.curvature import Extremal, build_graph
from hypfour.errors import ConstructionError
from hypfour.evolute import angle_gaps, build_evolute, detect_cusps, theorem3_check
from hypfour.generator import GenSpec, generate
from hypfour.polygon import HPolygon


def test_centers_are_equidistant(pentagon):
    E = build_evolute(pentagon)
    assert E.n == pentagon.n
    for i, O in enumerate(E.centers):
        assert circle_spread(O, pentagon.triple(i)) < 1e-9


def test_cusps_match_extremal_vertices(pentagon, hexagon):
    for P in (pentagon, hexagon):
        rep = theorem3_check(P)
        assert rep.ok and rep.asserted
        assert rep.extremal == rep.cusp
        assert sum(rep.cusp) == build_graph(P).N


def test_gap_decomposition(hexagon):
    """Gap is pi + defect at extremal vertices and the bare defect elsewhere."""
    from hypfour.identities import defects

    E = build_evolute(hexagon)
    g = build_graph(hexagon)
    for gap, rec, kind in zip(angle_gaps(hexagon, E), defects(hexagon, E), g.extremal):
        expect = rec.delta + (math.pi if kind is not Extremal.NONE else 0.0)
        assert gap == pytest.approx(expect, abs=1e-12)


def test_rotation_shifts_cusps():
    P = generate(GenSpec(9, 4))[0]
    c = detect_cusps(P, build_evolute(P))
    Q = P.rotated(4)
    assert detect_cusps(Q, build_evolute(Q)) == c[4:] + c[:4]


def test_concyclic_input_has_degenerate_evolute(square):
    with pytest.raises(ConstructionError):
        build_evolute(square)


def test_hypercycle_triple_blocks_construction():
    # three nearly collinear vertices far from a circle
    P = HPolygon.from_poincare([(-0.6, 0.05), (0.0, 0.0), (0.6, 0.05), (0.0, 0.7)])
    with pytest.raises(ConstructionError):
        build_evolute(P)


def test_nonconvex_report_not_asserted(dart):
    rep = theorem3_check(dart)
    assert not rep.asserted
    assert rep.range_violations == ()


def test_many_random_polygons():
    for seed in range(40):
        P = generate(GenSpec(4 + seed % 9, seed))[0]
        rep = theorem3_check(P)
        assert rep.ok, (seed, rep)


def test_pentagon_evolute_sits_inside(pentagon):
    E = build_evolute(pentagon)
    reach = max(geom.hdist(geom.ORIGIN, v) for v in pentagon.vertices)
    assert all(geom.hdist(geom.ORIGIN, O) < reach for O in E.centers)


def test_evolute_isometry_equivariant(rng, hexagon):
    from hypfour import isometry

    M = isometry.random_isometry(rng)
    E = build_evolute(hexagon)
    F = build_evolute(hexagon.map(lambda p: isometry.apply(M, p)))
    for O, G in zip(E.centers, F.centers):
        assert geom.hdist(G, isometry.apply(M, O)) < 1e-8
    assert F.left_angles == pytest.approx(E.left_angles, abs=1e-8)


def test_quadrilateral_cusps():
    for seed in range(20):
        P = generate(GenSpec(4, seed))[0]
        assert detect_cusps(P, build_evolute(P)) == [True] * 4


def test_nearly_concyclic_run_is_rejected():
    # four consecutive vertices on one circle: consecutive centers coincide
    pts = [(0.4 * math.cos(t), 0.4 * math.sin(t)) for t in (0.0, 0.8, 1.6, 2.4)] + [(-0.3, -0.3)]
    with pytest.raises(ConstructionError):
        build_evolute(HPolygon.from_poincare(pts))


def test_gap_ranges_on_hexagon(hexagon):
    E = build_evolute(hexagon)
    for gap, kind in zip(angle_gaps(hexagon, E), build_graph(hexagon).extremal):
        if kind is Extremal.NONE:
            assert 0 < gap < math.pi
        else:
            assert gap > math.pi
