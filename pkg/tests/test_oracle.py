from fractions import Fraction as F
import random

import pytest

from piercing.bodies import AffineMap, BoxBody, Family, Member, normalize_affine
from piercing.errors import TooLarge
from piercing.generators import (
    five_square_cycle,
    nine_triangles,
    random_family,
    unit_disk,
    unit_square,
    unit_triangle,
)
from piercing.geom import Point, clip_chain
from piercing.oracle import (
    candidate_points,
    clique_partition_number,
    exact_nu,
    exact_tau,
    max_independent_set,
    min_set_cover,
    solve,
)
from piercing.bodies import intersection_graph_bruteforce


class TestCandidates:
    def test_crossing_points_present(self):
        f = Family(unit_square(), [Member(Point(0, 0)), Member(Point(F(1, 2), F(1, 2)))])
        cands = candidate_points(f)
        assert Point(F(1, 2), 1) in cands
        assert Point(1, F(1, 2)) in cands

    def test_nested_inner_vertices_present(self):
        f = Family(unit_square(), [Member(Point(0, 0), 1), Member(Point(F(1, 4), F(1, 4)), F(1, 2))],
                   "homothets")
        cands = candidate_points(f)
        assert Point(F(1, 4), F(1, 4)) in cands

    def test_too_large(self):
        f = random_family(unit_square(), 17, seed=0)
        with pytest.raises(TooLarge):
            candidate_points(f)

    def test_every_intersecting_clique_has_a_candidate(self):
        rng = random.Random(19)
        from piercing.generators import random_convex_polygon

        base = random_convex_polygon(rng, max_vertices=8, spread=2)
        f = random_family(base, 8, box_size=4, seed=20)
        cands = candidate_points(f)
        polys = [f.realize(i).polygon for i in range(len(f))]
        import itertools

        for r in range(1, 5):
            for subset in itertools.combinations(range(len(f)), r):
                chain = list(polys[subset[0]].vertices)
                for i in subset[1:]:
                    for n, c in polys[i].halfplanes():
                        chain = clip_chain(chain, n, c)
                        if not chain:
                            break
                    if not chain:
                        break
                if chain:
                    assert any(
                        all(f.realize(i).contains(p) for i in subset) for p in cands
                    )


class TestExactValues:
    def test_five_cycle(self):
        res = solve(five_square_cycle())
        assert (res.tau, res.nu) == (3, 2)

    def test_nine_triangles(self):
        res = solve(nine_triangles(F(1, 100)))
        assert (res.tau, res.nu) == (3, 1)

    def test_single_body(self):
        f = Family(unit_disk(), [Member(Point(0, 0))])
        assert exact_tau(f)[0] == 1
        assert exact_nu(f)[0] == 1

    def test_disjoint_bodies(self):
        f = Family(unit_square(), [Member(Point(5 * i, 0)) for i in range(6)])
        assert exact_nu(f)[0] == 6
        assert exact_tau(f)[0] == 6

    def test_tau_points_pierce(self):
        f = random_family(unit_disk(), 10, box_size=5, seed=21)
        tau, pts = exact_tau(f)
        for i in range(len(f)):
            assert any(f.realize(i).contains(p) for p in pts)

    def test_nu_members_disjoint(self):
        f = random_family(unit_triangle(), 12, box_size=5, seed=22)
        nu, members = exact_nu(f)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                assert not f.intersects(members[a], members[b])


class TestSolvers:
    def test_min_set_cover_small(self):
        masks = [0b0111, 0b1100, 0b1010, 0b0001]
        got = min_set_cover(4, masks)
        assert len(got) == 2

    def test_min_set_cover_uncoverable(self):
        with pytest.raises(ValueError):
            min_set_cover(2, [0b01])

    def test_mis_on_cycle(self):
        adj = [{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}]
        assert len(max_independent_set(adj)) == 2

    def test_clique_partition_on_cycle(self):
        adj = [{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}]
        assert clique_partition_number(adj) == 3

    def test_sampling_never_beats_oracle(self):
        # dense random sampling cannot find a smaller piercing set
        rng = random.Random(23)
        for trial in range(12):
            f = random_family(unit_square(), 8, box_size=3, seed=200 + trial)
            tau, _ = exact_tau(f)
            masks = []
            for _ in range(400):
                p = Point(F(rng.randrange(-10, 41), 10), F(rng.randrange(-10, 41), 10))
                m = 0
                for i in range(len(f)):
                    if f.realize(i).contains(p):
                        m |= 1 << i
                masks.append(m)
            if _union_all(masks) == (1 << len(f)) - 1:
                sampled = min_set_cover(len(f), masks)
                assert len(sampled) >= tau


def _union_all(masks):
    u = 0
    for m in masks:
        u |= m
    return u


class TestBoxes:
    def test_tau_equals_clique_partition_for_boxes(self):
        for trial in range(6):
            base = BoxBody((0, 0), (1, 1))
            f = random_family(base, 9, box_size=3, seed=300 + trial)
            tau, _ = exact_tau(f)
            theta = clique_partition_number(intersection_graph_bruteforce(f))
            assert tau == theta


class TestAffineInvariance:
    def test_oracle_invariant_under_affine_maps(self):
        m = AffineMap(2, 1, F(1, 3), 1, 5, -7)
        for trial in range(4):
            f = random_family(unit_triangle(), 9, box_size=4, seed=400 + trial)
            g = normalize_affine(f, m)
            assert exact_tau(f)[0] == exact_tau(g)[0]
            assert exact_nu(f)[0] == exact_nu(g)[0]
