import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypfour.curvature import (Direction, Extremal, build_graph, compare, graph_from_directions,
                               poincare_hopf_check, radii_compare, vertex_index)
from hypfour.errors import TieError
from hypfour.generator import perturbed_regular

U, D = Direction.UP, Direction.DOWN


def test_flipped():
    assert U.flipped() is D and D.flipped() is U


def test_pattern_classification():
    g = graph_from_directions([U, D, U, D])
    assert g.extremal == (Extremal.MIN, Extremal.MAX, Extremal.MIN, Extremal.MAX)
    assert g.N == 4 and g.l_plus == 2 and g.l_minus == 2


def test_monotone_run():
    g = graph_from_directions([U, U, U, D])
    # vertex i reads (edge i-1, edge i): vertex 0 is (D, U), vertex 3 is (U, D)
    assert g.extremal == (Extremal.MIN, Extremal.NONE, Extremal.NONE, Extremal.MAX)
    assert (g.l_plus, g.l_minus, g.N) == (1, 1, 2)


def test_index_values():
    g = graph_from_directions([U, U, U, D])
    assert [vertex_index(g, i) for i in range(4)] == [1, 0, 0, -1]


def test_exits_and_index():
    g = graph_from_directions([U, D, U, D])
    for i in range(4):
        assert vertex_index(g, i) == 1 - g.exits(i)
    assert sum(vertex_index(g, i) for i in range(4)) == 0


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from([U, D]), min_size=3, max_size=40))
def test_combinatorial_balance(dirs):
    g = graph_from_directions(dirs)
    assert g.l_plus == g.l_minus
    assert g.N % 2 == 0
    assert poincare_hopf_check(g)


def test_all_short_patterns():
    for n in range(3, 9):
        for dirs in itertools.product([U, D], repeat=n):
            g = graph_from_directions(dirs)
            assert sum(vertex_index(g, i) for i in range(n)) == 0


def test_compare_matches_radii_on_fixtures(pentagon, hexagon):
    for P in (pentagon, hexagon):
        for i in range(P.n):
            assert compare(P, i) is radii_compare(P, i)


def test_compare_rejects_concyclic(square):
    with pytest.raises(TieError):
        compare(square, 0)
    with pytest.raises(TieError):
        radii_compare(square, 0)


def test_radii_compare_requires_convexity(dart):
    with pytest.raises(ValueError):
        radii_compare(dart, 0)


def test_four_vertex_on_fixtures(pentagon, hexagon):
    for P in (pentagon, hexagon):
        g = build_graph(P)
        assert g.N >= 4 and g.N % 2 == 0
        assert g.n == P.n


def test_graph_reverses_with_orientation():
    P = perturbed_regular(7, 1e-2, 5)[0]
    g = build_graph(P)
    h = build_graph(P.rotated(2))
    assert h.extremal == g.extremal[2:] + g.extremal[:2]


def test_inside_means_up(pentagon, hexagon):
    from hypfour.circumcircle import Position, point_vs_circle

    seen = set()
    for P in (pentagon, hexagon):
        for i in range(P.n):
            pos = point_vs_circle(P.circle(i), P[i + 2])
            seen.add(pos)
            assert compare(P, i) is (U if pos is Position.INSIDE else D)
            assert radii_compare(P, i) is (U if P.radius(i) > P.radius(i + 1) else D)
    assert seen == {Position.INSIDE, Position.OUTSIDE}


def test_quadrilaterals_have_four_extremal_vertices():
    from hypfour.generator import GenSpec, generate

    for seed in range(30):
        g = build_graph(generate(GenSpec(4, seed))[0])
        assert g.N == 4 and g.l_plus == g.l_minus == 2
