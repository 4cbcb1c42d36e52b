from fractions import Fraction as F

import pytest

from piercing.bodies import Family, Member, intersection_graph_bruteforce
from piercing.errors import EpsilonTooLarge, TooLarge
from piercing.generators import (
    five_square_cycle,
    grid_family,
    hexagon_body,
    nine_triangles,
    pairwise_intersecting_family,
    random_family,
    unit_disk,
    unit_square,
    unit_triangle,
)
from piercing.geom import Point
from piercing.oracle import exact_tau, solve
from piercing.translates import hexagon_pierce


class TestFiveCycle:
    def test_graph_is_c5(self):
        f = five_square_cycle()
        adj = intersection_graph_bruteforce(f)
        assert all(len(a) == 2 for a in adj)
        # connected 2-regular on 5 vertices equals the 5-cycle
        seen = {0}
        cur, prev = next(iter(adj[0])), 0
        while cur != 0:
            seen.add(cur)
            cur, prev = next(iter(adj[cur] - {prev})), cur
        assert len(seen) == 5

    def test_paper_values(self):
        res = solve(five_square_cycle())
        assert (res.tau, res.nu) == (3, 2)

    def test_members_are_unit_squares(self):
        f = five_square_cycle()
        assert all(m.s == 1 for m in f.members)
        assert f.realize(0).measure() == 1


class TestNineTriangles:
    def test_paper_values(self):
        res = solve(nine_triangles(F(1, 100)))
        assert (res.tau, res.nu) == (3, 1)

    def test_pairwise_intersecting(self):
        f = nine_triangles(F(1, 100))
        for i in range(9):
            for j in range(i + 1, 9):
                assert f.intersects(i, j)

    def test_epsilon_bounds(self):
        with pytest.raises(EpsilonTooLarge):
            nine_triangles(F(1, 5))
        with pytest.raises(EpsilonTooLarge):
            nine_triangles(0)

    def test_large_epsilon_drops_tau_to_two(self):
        # replicate the construction beyond the guard: at eps = 1/2 the three
        # shifted triples gain common points and two points suffice
        eps = F(1, 2)
        a, b, c = Point(0, 0), Point(1, 0), Point(0, 1)
        ts = [a, b, c]
        for src, dst in ((a, b), (a, c), (b, a), (b, c), (c, a), (c, b)):
            ts.append(src + (dst - src) * eps)
        f = Family(unit_triangle(), [Member(t) for t in ts])
        tau, _ = exact_tau(f)
        assert tau == 2


class TestGridFamily:
    def test_counts(self):
        assert len(grid_family(2, unit_disk())) == 16
        assert len(grid_family(1, unit_disk())) == 1

    def test_cap(self):
        with pytest.raises(TooLarge):
            grid_family(9, unit_disk())

    def test_ratio_at_least_one(self):
        res = solve(grid_family(2, unit_disk()))
        assert res.nu <= res.tau


class TestRandomFamily:
    def test_deterministic(self):
        f = random_family(unit_square(), 20, seed=5)
        g = random_family(unit_square(), 20, seed=5)
        assert all(
            a.t == b.t and a.s == b.s for a, b in zip(f.members, g.members)
        )

    def test_huge_box_gives_empty_graph(self):
        f = random_family(unit_square(), 10, box_size=10_000, seed=6)
        adj = intersection_graph_bruteforce(f)
        assert sum(len(a) for a in adj) == 0

    def test_translates_have_unit_scale(self):
        f = random_family(unit_disk(), 15, seed=7)
        assert all(m.s == 1 for m in f.members)


class TestPairwiseIntersecting:
    def test_hexagon_two_point_pierce(self):
        f = pairwise_intersecting_family(hexagon_body(), 20, seed=8)
        cert = hexagon_pierce(f)
        assert len(cert.points) <= 2

    def test_square_helly_point(self):
        f = pairwise_intersecting_family(unit_square(), 12, seed=9)
        tau, _ = exact_tau(f)
        assert tau == 1

    def test_disk_tau_at_most_three(self):
        for seed in range(6):
            f = pairwise_intersecting_family(unit_disk(), 10, seed=30 + seed)
            tau, _ = exact_tau(f)
            assert tau <= 3
