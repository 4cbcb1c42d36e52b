from fractions import Fraction as F
import random

import pytest

from piercing.bodies import AffineMap
from piercing.errors import NotCentrallySymmetric, NotHexagon
from piercing.generators import (
    random_centrally_symmetric_polygon,
    random_convex_polygon,
    random_cs_hexagon,
)
from piercing.geom import ConvexPolygon, Point
from piercing.sandwich import (
    hexagon_sandwich,
    hexagon_sandwich_special,
    inscribed_hexagon,
    sandwich_parallelograms,
    support_hexagon,
)

SQUARE = ConvexPolygon([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
TRIANGLE = ConvexPolygon([Point(0, 0), Point(1, 0), Point(0, 1)])
HEXAGON = ConvexPolygon(
    [Point(2, 0), Point(1, 2), Point(-1, 2), Point(-2, 0), Point(-1, -2), Point(1, -2)]
)


def test_square_gamma_two():
    pair = sandwich_parallelograms(SQUARE)
    assert pair.gamma == 2
    assert pair.lambdas == (1, 1)
    assert pair.verify(SQUARE)


def test_triangle_gamma_six():
    pair = sandwich_parallelograms(TRIANGLE)
    assert pair.gamma == 6
    assert sorted(pair.lambdas) == [2, 2]
    assert pair.verify(TRIANGLE)


def test_sheared_parallelogram_gamma_two():
    p = SQUARE.linear_map(1, F(2, 3), 0, 1).translate(Point(5, -1))
    pair = sandwich_parallelograms(p)
    assert pair.gamma == 2


def test_random_polygons_gamma_at_most_six():
    rng = random.Random(123)
    for _ in range(12):
        poly = random_convex_polygon(rng).polygon
        pair = sandwich_parallelograms(poly)
        assert pair.verify(poly)
        assert pair.gamma <= 6
        assert all(l >= 1 for l in pair.lambdas)


def test_pair_edges_relation():
    pair = sandwich_parallelograms(TRIANGLE)
    assert pair.q.u == pair.p.u * pair.lambdas[0]
    assert pair.q.v == pair.p.v * pair.lambdas[1]


class TestHexagonSandwich:
    def test_hexagon_is_its_own_sandwich(self):
        hs = hexagon_sandwich(HEXAGON)
        assert hs.area_ratio == 1
        assert hs.h_in == HEXAGON
        assert hs.h_out == HEXAGON

    def test_square_achieves_three_quarters(self):
        s = ConvexPolygon([Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)])
        hs = hexagon_sandwich(s)
        assert hs.area_ratio >= F(3, 4)

    def test_not_centrally_symmetric(self):
        with pytest.raises(NotCentrallySymmetric):
            hexagon_sandwich(TRIANGLE)

    def test_inscribed_hexagon_affinely_regular_and_inside(self):
        rng = random.Random(31)
        for _ in range(8):
            s = random_centrally_symmetric_polygon(rng).polygon
            c = s.is_centrally_symmetric()
            s0 = s.translate(-c)
            h = inscribed_hexagon(s0, s0.vertices[0])
            v = h.vertices
            assert len(v) == 6
            # central symmetry + p2p1 + p2p3 = p3p4 characterizes affine regularity
            assert h.is_centrally_symmetric() == Point(0, 0)
            p1, p2, p3, p4 = v[0], v[1], v[2], v[3]
            assert (p1 - p2) + (p3 - p2) == p4 - p3
            assert all(s0.contains(p) for p in v)

    def test_containments_exact_and_folklore_ratio(self):
        rng = random.Random(77)
        for _ in range(8):
            s = random_centrally_symmetric_polygon(rng, half_vertices=5).polygon
            hs = hexagon_sandwich(s)
            assert all(s.contains(p) for p in hs.h_in.vertices)
            assert all(hs.h_out.contains(p) for p in s.vertices)
            assert hs.area_ratio > F(70, 100)

    def test_fixed_direction_ratio_is_affine_invariant(self):
        s = ConvexPolygon([Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)])
        d = Point(1, 0)
        h_in = inscribed_hexagon(s, d)
        ratio = h_in.area() / support_hexagon(s, h_in).area()
        m = AffineMap(2, 1, 0, 1)
        s2 = s.linear_map(2, 1, 0, 1)
        d2 = m.apply_vector(d)
        h_in2 = inscribed_hexagon(s2, d2)
        ratio2 = h_in2.area() / support_hexagon(s2, h_in2).area()
        assert ratio == ratio2


class TestHexagonSpecial:
    def test_regular_hexagon(self):
        pair = hexagon_sandwich_special(HEXAGON)
        assert pair.gamma <= 3
        assert pair.verify(HEXAGON)

    def test_flat_hexagon(self):
        flat = ConvexPolygon(
            [Point(10, 0), Point(9, 1), Point(-9, 1), Point(-10, 0), Point(-9, -1), Point(9, -1)]
        )
        pair = hexagon_sandwich_special(flat)
        assert pair.gamma <= 3
        assert pair.verify(flat)

    def test_square_rejected(self):
        with pytest.raises(NotHexagon):
            hexagon_sandwich_special(SQUARE)

    def test_random_hexagons(self):
        rng = random.Random(5)
        for _ in range(20):
            h = random_cs_hexagon(rng).polygon
            pair = hexagon_sandwich_special(h)
            assert pair.gamma <= 3
            assert pair.verify(h)
