import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from rigidset.experiments import (
    CantorSampler,
    EnumerationLimitError,
    LatticeSampler,
    UnitCubeSampler,
    build_lattice_set,
    congruence_class_counts,
    count_congruence_classes,
    covering_count,
    distance_images,
    euler_t24,
    fit_box_dimension,
    hausdorff_content_bound,
    k4_euler_residuals,
    sample_distance_set,
    sample_framework_tuples,
)
from rigidset.graphs import complete_graph, make_graph, path_graph


def pairwise_distance(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


def random_convex_quad(rng):
    """Four points in convex position, labeled in convex cyclic order."""
    while True:
        pts = [(rng.random(), rng.random()) for _ in range(4)]
        cx = sum(p[0] for p in pts) / 4
        cy = sum(p[1] for p in pts) / 4
        pts.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        crosses = []
        for i in range(4):
            a, b, c = pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4]
            crosses.append((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]))
        if all(v > 1e-6 for v in crosses) or all(v < -1e-6 for v in crosses):
            return pts


def random_reflex_quad(rng):
    """Vertex 4 inside triangle 1-2-3, so 2 and 4 share a side of the 1-3
    diagonal."""
    while True:
        a, b, c = [(rng.random(), rng.random()) for _ in range(3)]
        w = sorted([rng.uniform(0.05, 0.95) for _ in range(2)])
        u, v = w[0], w[1] - w[0]
        t = 1 - u - v
        if min(u, v, t) < 0.05:
            continue
        inner = (u * a[0] + v * b[0] + t * c[0], u * a[1] + v * b[1] + t * c[1])
        area = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
        if area > 0.05:
            return [a, b, c, inner]


def quad_lengths(pts):
    d = pairwise_distance
    return {
        "t12": d(pts[0], pts[1]), "t13": d(pts[0], pts[2]),
        "t14": d(pts[0], pts[3]), "t23": d(pts[1], pts[2]),
        "t24": d(pts[1], pts[3]), "t34": d(pts[2], pts[3]),
    }


class TestEulerT24:
    def test_unit_square(self):
        got = euler_t24(1, math.sqrt(2), 1, 1, 1, convex=True)
        assert got == pytest.approx(math.sqrt(2), rel=1e-12)

    def test_convex_matches_coordinates(self):
        rng = random.Random(606)
        for _ in range(300):
            t = quad_lengths(random_convex_quad(rng))
            got = euler_t24(t["t12"], t["t13"], t["t14"], t["t23"], t["t34"],
                            convex=True)
            assert abs(got - t["t24"]) / t["t24"] < 1e-9

    def test_reflex_matches_coordinates(self):
        rng = random.Random(707)
        for _ in range(300):
            t = quad_lengths(random_reflex_quad(rng))
            got = euler_t24(t["t12"], t["t13"], t["t14"], t["t23"], t["t34"],
                            convex=False)
            assert abs(got - t["t24"]) / t["t24"] < 1e-9

    def test_branches_differ(self):
        a = euler_t24(1, 2, 1, 1.5, 1.5, convex=True)
        b = euler_t24(1, 2, 1, 1.5, 1.5, convex=False)
        assert abs(a - b) > 0.1

    def test_coincident_reflex_vertices(self):
        # t14 = t12 and t34 = t23 on the same side puts vertex 4 on vertex 2
        got = euler_t24(1, 2, 1, 1.5, 1.5, convex=False)
        assert got == pytest.approx(0.0, abs=1e-7)

    def test_degenerate_triangles_rejected(self):
        with pytest.raises(ValueError, match="triangle"):
            euler_t24(1, 2, 1, 1, 1)
        with pytest.raises(ValueError, match="triangle"):
            euler_t24(1, 1, 1, 2, 1)

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError, match="positive"):
            euler_t24(0, 1, 1, 1, 1)
        with pytest.raises(ValueError, match="positive"):
            euler_t24(1, 1, 1, -2, 1)


class TestK4Residuals:
    def test_random_tuples_lie_on_hypersurface(self):
        rng = np.random.default_rng(42)
        tuples = rng.random((10000, 4, 2))
        residuals = k4_euler_residuals(tuples)
        assert residuals.shape == (10000,)
        assert float(residuals.max()) < 1e-9

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            k4_euler_residuals(np.zeros((5, 3, 2)))
        with pytest.raises(ValueError):
            k4_euler_residuals(np.zeros((5, 4, 3)))

    def test_matches_scalar_on_convex_quads(self):
        rng = random.Random(808)
        quads = np.array([random_convex_quad(rng) for _ in range(50)])
        assert float(k4_euler_residuals(quads).max()) < 1e-9


class TestCongruenceCounts:
    @pytest.mark.parametrize("d,q,k,want", [
        (2, 1, 1, 3),
        (2, 2, 1, 6),
        (2, 3, 1, 10),
        (1, 2, 1, 3),
    ])
    def test_frozen_pair_counts(self, d, q, k, want):
        unlabeled, labeled = congruence_class_counts(d, q, k)
        assert unlabeled == labeled == want

    def test_pairs_count_squared_norms(self):
        # k = 1: classes are exactly the distinct squared norms of difference
        # vectors, zero included
        for q in (1, 2, 3):
            norms = {
                (a - c) ** 2 + (b - e) ** 2
                for a in range(q + 1) for b in range(q + 1)
                for c in range(q + 1) for e in range(q + 1)}
            assert congruence_class_counts(2, q, 1)[0] == len(norms)

    def test_matches_orbit_oracle(self):
        # canonical forms under vertex relabeling count true unlabeled
        # classes; the sorted-multiset invariant must agree for k <= 2
        for q in (1, 2):
            for k in (1, 2):
                points = list(itertools.product(range(q + 1), repeat=2))
                pairs = list(itertools.combinations(range(k + 1), 2))
                perms = list(itertools.permutations(range(k + 1)))
                canon = set()
                for tup in itertools.product(points, repeat=k + 1):
                    canon.add(min(
                        tuple(
                            sum((tup[p[a]][t] - tup[p[b]][t]) ** 2 for t in range(2))
                            for a, b in pairs)
                        for p in perms))
                assert congruence_class_counts(2, q, k)[0] == len(canon)

    def test_unlabeled_at_most_labeled(self):
        for q in (1, 2):
            for k in (1, 2):
                unlabeled, labeled = congruence_class_counts(2, q, k)
                assert unlabeled <= labeled

    def test_bound(self):
        for q in (1, 2, 3):
            for k in (1, 2):
                unlabeled, labeled = congruence_class_counts(2, q, k)
                assert labeled <= (2 * q + 1) ** (2 * k)

    def test_labeled_flag(self):
        assert count_congruence_classes(2, 2, 2) == congruence_class_counts(2, 2, 2)[0]
        assert count_congruence_classes(2, 2, 2, labeled=True) == \
            congruence_class_counts(2, 2, 2)[1]

    def test_enumeration_guard(self):
        with pytest.raises(EnumerationLimitError):
            congruence_class_counts(2, 50, 3)
        assert issubclass(EnumerationLimitError, ValueError)

    def test_validation(self):
        for bad in ((0, 1, 1), (1, 0, 1), (1, 1, 0)):
            with pytest.raises(ValueError):
                congruence_class_counts(*bad)


class TestContentBound:
    def test_q_one_is_always_one(self):
        assert hausdorff_content_bound(2, 1, 3, 1.5) == 1.0

    def test_critical_s_in_plane(self):
        # s = 1 with d=2, k=1 zeroes the exponent
        for q in (1, 2, 17):
            assert hausdorff_content_bound(2, q, 1, 1.0) == 1.0

    def test_frozen_value(self):
        got = hausdorff_content_bound(2, 2, 1, 1.5)
        assert got == pytest.approx(2 ** (2 / 3), rel=1e-12)

    def test_decreasing_iff_below_critical(self):
        checked = 0
        for d in (2, 3, 4):
            for k in (1, 2, 3, 4):
                critical = d - d * (d - 1) / 2 / k
                for s in np.linspace(d / 2, d - 0.05, 8):
                    s = float(s)
                    if abs(s - critical) < 0.02:
                        continue
                    decreasing = (hausdorff_content_bound(d, 3, k, s)
                                  < hausdorff_content_bound(d, 2, k, s))
                    assert decreasing == (s < critical)
                    checked += 1
        assert checked >= 80

    def test_s_range(self):
        hausdorff_content_bound(2, 2, 1, 1.0)
        with pytest.raises(ValueError, match="s must lie"):
            hausdorff_content_bound(2, 2, 1, 0.99)
        with pytest.raises(ValueError, match="s must lie"):
            hausdorff_content_bound(2, 2, 1, 2.0)
        with pytest.raises(ValueError, match="s must lie"):
            hausdorff_content_bound(2, 2, 1, 2.5)

    def test_validation(self):
        with pytest.raises(ValueError):
            hausdorff_content_bound(1, 2, 1, 0.75)
        with pytest.raises(ValueError):
            hausdorff_content_bound(2, 0, 1, 1.0)


class TestLatticeSet:
    def test_frozen_small(self):
        ls = build_lattice_set(2, 2, 1.0)
        assert len(ls.points) == 9
        assert ls.radius == pytest.approx(1 / 4)
        assert all(isinstance(c, Fraction) for p in ls.points for c in p)
        assert (Fraction(1, 2), Fraction(1, 2)) in ls.points
        assert all(0 <= c <= 1 for p in ls.points for c in p)

    def test_frozen_q4(self):
        ls = build_lattice_set(2, 4, 1.0)
        assert len(ls.points) == 25
        assert ls.radius == pytest.approx(1 / 16)

    def test_radius_formula(self):
        ls = build_lattice_set(3, 4, 2.5)
        assert ls.radius == pytest.approx(4 ** (-3 / 2.5), rel=1e-12)

    def test_point_guard(self):
        with pytest.raises(EnumerationLimitError):
            build_lattice_set(2, 4000, 1.0)

    def test_s_range(self):
        with pytest.raises(ValueError, match="s must lie"):
            build_lattice_set(2, 2, 2.0)


class TestSamplers:
    def test_unit_cube(self):
        rng = np.random.default_rng(1)
        draws = UnitCubeSampler(3).draw(rng, 500)
        assert draws.shape == (500, 3)
        assert draws.min() >= 0 and draws.max() < 1

    def test_lattice_sampler_stays_in_balls(self):
        ls = build_lattice_set(2, 2, 1.0)
        sampler = LatticeSampler(ls)
        rng = np.random.default_rng(2)
        draws = sampler.draw(rng, 400)
        centers = np.array([[float(c) for c in p] for p in ls.points])
        dists = np.linalg.norm(draws[:, None, :] - centers[None, :, :], axis=2)
        assert dists.min(axis=1).max() <= ls.radius + 1e-12

    def test_cantor_digits(self):
        rng = np.random.default_rng(3)
        draws = CantorSampler(2, depth=35).draw(rng, 200)
        assert draws.shape == (200, 2)
        assert draws.min() >= 0 and draws.max() <= 1
        for x in draws.ravel():
            for _ in range(10):
                if x >= 0.5:
                    x = 3 * x - 2
                else:
                    assert x < 1 / 3 + 1e-7
                    x = 3 * x

    def test_validation(self):
        with pytest.raises(ValueError):
            UnitCubeSampler(0)
        with pytest.raises(ValueError):
            CantorSampler(0)


class TestSampling:
    def test_tuple_shape_and_determinism(self):
        sampler = UnitCubeSampler(2)
        a = sample_framework_tuples(sampler, 3, 50, seed=9)
        b = sample_framework_tuples(sampler, 3, 50, seed=9)
        c = sample_framework_tuples(sampler, 3, 50, seed=10)
        assert a.shape == (50, 3, 2)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_bad_count(self):
        with pytest.raises(ValueError):
            sample_framework_tuples(UnitCubeSampler(2), 3, 0, seed=1)

    def test_distance_images(self):
        tuples = np.array([[[0.0, 0.0], [3.0, 4.0]]])
        img = distance_images(complete_graph(2), tuples)
        assert img.shape == (1, 1)
        assert img[0, 0] == pytest.approx(5.0)

    def test_distance_images_edge_order(self):
        tuples = np.array([[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]])
        img = distance_images(complete_graph(3), tuples)
        assert img[0] == pytest.approx([1.0, math.sqrt(2), 1.0])

    def test_edgeless_graph(self):
        tuples = np.zeros((4, 3, 2))
        assert distance_images(make_graph(3, []), tuples).shape == (4, 0)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            distance_images(complete_graph(3), np.zeros((4, 2, 2)))

    def test_sample_distance_set_composition(self):
        g = path_graph(3)
        sampler = UnitCubeSampler(2)
        direct = sample_distance_set(g, sampler, 40, seed=5)
        manual = distance_images(g, sample_framework_tuples(sampler, 3, 40, seed=5))
        assert np.array_equal(direct, manual)


class TestCovering:
    def test_single_point(self):
        for eps in (1.0, 0.5, 0.125):
            assert covering_count(np.array([[0.3, 0.7]]), eps) == 1

    def test_frozen_1d(self):
        cloud = np.array([0.0, 0.3, 0.6, 0.9])
        assert covering_count(cloud, 0.5) == 2
        assert covering_count(cloud, 0.25) == 4

    def test_grid_anchored_at_origin(self):
        cloud = np.array([0.49, 0.51])
        assert covering_count(cloud, 0.5) == 2

    def test_nested_scales_monotone(self):
        rng = np.random.default_rng(6)
        cloud = rng.random((300, 2))
        for e in (2, 3, 4):
            coarse = covering_count(cloud, 2.0 ** -e)
            fine = covering_count(cloud, 2.0 ** -(e + 1))
            assert coarse <= fine <= 4 * coarse

    def test_validation(self):
        with pytest.raises(ValueError):
            covering_count(np.array([1.0]), 0)
        with pytest.raises(ValueError):
            covering_count(np.array([]), 0.5)


class TestBoxDimension:
    def test_uniform_interval_slope_one(self):
        rng = np.random.default_rng(8)
        est = fit_box_dimension(rng.random(20000), [2.0 ** -e for e in range(3, 8)])
        assert est.slope == pytest.approx(1.0, abs=0.01)
        assert est.counts == (8, 16, 32, 64, 128)

    def test_cantor_distance_set_full_dimension(self):
        # the pair-distance set of the middle-thirds Cantor set fills [0,1]
        cloud = sample_distance_set(
            complete_graph(2), CantorSampler(1), 30000, seed=13)
        est = fit_box_dimension(cloud, [2.0 ** -e for e in range(3, 8)])
        assert est.slope == pytest.approx(1.0, abs=0.05)

    def test_cantor_set_itself_log2_over_log3(self):
        rng = np.random.default_rng(14)
        cloud = CantorSampler(1).draw(rng, 30000)
        est = fit_box_dimension(cloud, [2.0 ** -e for e in range(3, 8)])
        assert 0.55 < est.slope < 0.72

    def test_single_point_slope_zero(self):
        est = fit_box_dimension(np.array([[0.25, 0.25]]), [0.5, 0.25, 0.125])
        assert est.counts == (1, 1, 1)
        assert est.slope == pytest.approx(0.0, abs=1e-12)

    def test_needs_two_scales(self):
        with pytest.raises(ValueError):
            fit_box_dimension(np.array([1.0, 2.0]), [0.5])

    def test_estimate_fields(self):
        est = fit_box_dimension(np.array([0.1, 0.9]), [0.5, 0.25])
        assert est.scales == (0.5, 0.25)
        assert len(est.counts) == 2
