import json
import random
from fractions import Fraction

import pytest

from rigidset.graphs import (
    complete_graph,
    double_banana,
    make_graph,
    path_graph,
    star_graph,
)
from rigidset.thresholds import (
    SMALL_REGIME_NOTE,
    analyze,
    natural_measure_exponent,
    necessary_exponent,
    predicted_distance_set_dimension,
    pruned_threshold,
    small_regime_threshold,
    sufficient_threshold,
)


class TestSufficientThreshold:
    @pytest.mark.parametrize("d,n,want", [
        (2, 4, Fraction(7, 4)),
        (2, 2, Fraction(3, 2)),
        (3, 8, Fraction(23, 8)),
        (3, 2, Fraction(5, 2)),
        (4, 10, Fraction(39, 10)),
    ])
    def test_frozen(self, d, n, want):
        assert sufficient_threshold(d, n) == want

    def test_exact_type(self):
        assert isinstance(sufficient_threshold(2, 3), Fraction)

    def test_validation(self):
        with pytest.raises(ValueError):
            sufficient_threshold(1, 4)
        with pytest.raises(ValueError):
            sufficient_threshold(2, 1)

    def test_approaches_d(self):
        values = [sufficient_threshold(2, n) for n in range(2, 30)]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert all(v < 2 for v in values)


class TestNecessaryExponent:
    @pytest.mark.parametrize("d,n,want", [
        (2, 4, Fraction(5, 3)),
        (2, 2, Fraction(1)),
        (3, 8, Fraction(18, 7)),
        (3, 4, Fraction(2)),
        (4, 3, Fraction(1)),
    ])
    def test_frozen(self, d, n, want):
        assert necessary_exponent(d, n) == want

    def test_always_below_sufficient(self):
        # C(d,2)/k > 1/(k+1) for every d >= 2, so the gap never closes
        for d in range(2, 7):
            for k in range(1, 51):
                assert necessary_exponent(d, k + 1) < sufficient_threshold(d, k + 1)

    def test_plane_comparison(self):
        # d=2: thresholds 2 - 1/(k+1) (sufficient) versus 2 - 1/k (necessary)
        for k in range(1, 51):
            assert sufficient_threshold(2, k + 1) == 2 - Fraction(1, k + 1)
            assert necessary_exponent(2, k + 1) == 2 - Fraction(1, k)


class TestNaturalMeasureExponent:
    @pytest.mark.parametrize("d,n,want", [
        (2, 2, Fraction(4, 3)),
        (2, 3, Fraction(8, 5)),
        (2, 4, Fraction(12, 7)),
        (3, 2, Fraction(11, 6)),
        (3, 3, Fraction(23, 10)),
        (3, 4, Fraction(35, 13)),
        (3, 6, Fraction(59, 21)),
        (4, 2, Fraction(7, 3)),
        (5, 2, Fraction(17, 6)),
        (4, 3, Fraction(31, 9)),
    ])
    def test_frozen(self, d, n, want):
        assert natural_measure_exponent(d, n) == want

    def test_plane_closed_form(self):
        for k in range(1, 51):
            assert natural_measure_exponent(2, k + 1) == Fraction(4 * k, 2 * k + 1)

    def test_below_ambient_dimension(self):
        for d in range(2, 6):
            for n in range(2, 12):
                assert natural_measure_exponent(d, n) < d

    def test_validation(self):
        with pytest.raises(ValueError):
            natural_measure_exponent(1, 3)
        with pytest.raises(ValueError):
            natural_measure_exponent(2, 1)


class TestSmallRegimeThreshold:
    @pytest.mark.parametrize("d,n,want", [
        (2, 2, Fraction(3, 2)),
        (2, 3, Fraction(5, 3)),
        (3, 4, Fraction(5, 2)),
        (5, 3, Fraction(11, 3)),
    ])
    def test_frozen(self, d, n, want):
        assert small_regime_threshold(d, n) == want

    def test_range_validation(self):
        with pytest.raises(ValueError):
            small_regime_threshold(2, 5)
        with pytest.raises(ValueError):
            small_regime_threshold(3, 1)

    def test_never_above_generic_sufficient(self):
        for d in range(2, 7):
            for n in range(2, d + 2):
                assert small_regime_threshold(d, n) <= sufficient_threshold(d, n)

    def test_note_mentions_the_formula(self):
        assert "(d*k+1)/(k+1)" in SMALL_REGIME_NOTE


class TestPrunedThreshold:
    def test_path5(self):
        # three removals leave K2: threshold 2 - 1/2
        assert pruned_threshold(path_graph(5), 2) == Fraction(3, 2)

    def test_star4(self):
        assert pruned_threshold(star_graph(4), 2) == Fraction(3, 2)

    def test_unprunable_equals_sufficient(self):
        g = double_banana()
        assert pruned_threshold(g, 3) == sufficient_threshold(3, 8)

    def test_always_at_most_sufficient(self):
        rng = random.Random(12)
        for _ in range(20):
            n = rng.randint(2, 9)
            edges = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
                     if rng.random() < 0.5]
            g = make_graph(n, edges)
            if any(g.degree(v) == 0 for v in range(1, n + 1)):
                continue
            assert pruned_threshold(g, 2) <= sufficient_threshold(2, n)


class TestPredictedDimension:
    def test_k4(self):
        assert predicted_distance_set_dimension(complete_graph(4), 2, seed=7) == 5

    def test_disconnected_sum(self):
        two_triangles = make_graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
        assert predicted_distance_set_dimension(two_triangles, 2, seed=7) == 6

    def test_isolated_vertices_contribute_nothing(self):
        g = make_graph(5, [(1, 2), (1, 3), (2, 3)])
        assert predicted_distance_set_dimension(g, 2, seed=7) == 3

    def test_double_banana(self):
        assert predicted_distance_set_dimension(double_banana(), 3, seed=7) == 17


class TestAnalyze:
    def test_k4_report(self):
        rep = analyze(complete_graph(4), 2, seed=7)
        assert rep.generic_rank == 5
        assert rep.predicted_distance_set_dimension == 5
        assert rep.is_generically_rigid
        assert not rep.is_minimally_rigid
        assert rep.sufficient_threshold == Fraction(7, 4)
        assert rep.natural_measure_exponent == Fraction(12, 7)
        assert rep.small_regime_threshold is None
        assert len(rep.components) == 1

    def test_k3_small_regime_present(self):
        rep = analyze(complete_graph(3), 2, seed=7)
        assert rep.small_regime_threshold == Fraction(5, 3)

    def test_double_banana_report(self):
        rep = analyze(double_banana(), 3, seed=7)
        assert rep.n_edges == 18
        assert rep.generic_rank == 17
        assert not rep.is_generically_rigid
        assert not rep.is_minimally_rigid
        assert rep.pruned_threshold == rep.sufficient_threshold == Fraction(23, 8)

    def test_disconnected_structure(self):
        g = make_graph(7, [(1, 2), (1, 3), (2, 3), (5, 6), (5, 7), (6, 7)])
        rep = analyze(g, 2, seed=7)
        assert rep.generic_rank == 6
        assert [sub.vertices for sub in rep.components] == [(1, 2, 3), (4,), (5, 6, 7)]
        assert rep.generic_rank == sum(s.generic_rank for s in rep.components)
        assert not rep.is_generically_rigid

    def test_single_vertex_component_fields(self):
        g = make_graph(4, [(1, 2), (1, 3), (2, 3)])
        rep = analyze(g, 2, seed=7)
        lonely = rep.components[1]
        assert lonely.n_vertices == 1
        assert lonely.sufficient_threshold is None
        assert lonely.pruned_threshold is None
        assert lonely.generic_rank == 0

    def test_isolated_vertex_blocks_top_level_pruning(self):
        g = make_graph(4, [(1, 2), (1, 3), (2, 3)])
        rep = analyze(g, 2, seed=7)
        assert rep.pruned_threshold is None
        assert rep.sufficient_threshold is not None

    def test_deterministic(self):
        g = double_banana()
        assert analyze(g, 3, seed=7) == analyze(g, 3, seed=7)

    def test_bad_dimension(self):
        with pytest.raises(ValueError):
            analyze(complete_graph(3), 1, seed=7)

    def test_json_obj_shape(self):
        rep = analyze(complete_graph(3), 2, seed=7)
        obj = rep.to_json_obj()
        assert obj["sufficient_threshold"] == "5/3"
        assert obj["natural_measure_exponent"] == "8/5"
        assert obj["small_regime_note"] == SMALL_REGIME_NOTE
        assert obj["components"][0]["vertices"] == [1, 2, 3]
        json.dumps(obj)

    def test_json_obj_omits_absent_fields(self):
        rep = analyze(complete_graph(4), 2, seed=7)
        obj = rep.to_json_obj()
        assert obj["small_regime_threshold"] is None
        assert "small_regime_note" not in obj
        assert "vertices" not in obj
