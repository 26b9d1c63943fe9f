import io

import numpy as np
import pytest

from walkrank import (DynGraph, aggregate_oracle, estimate, expected_visits,
                      init_store, make_rng, store_from_walks, total_variation,
                      write_scores_csv)


def _fixed_graph(n, seed, max_out=3):
    rng = np.random.default_rng(seed)
    g = DynGraph(n)
    for u in range(n):
        d = int(rng.integers(0, max_out + 1))
        others = [v for v in range(n) if v != u]
        for v in rng.choice(others, size=d, replace=False):
            g.add_edge(u, int(v))
    return g


# -- estimate ----------------------------------------------------------------


def test_estimate_isolated_equal_budgets_is_uniform():
    g = DynGraph(4)
    store = store_from_walks(g, [0, 1, 2, 3], [3, 3, 3, 3], 0.2, make_rng(0))
    assert np.allclose(estimate(store), 0.25)


def test_estimate_isolated_symmetric_statistically():
    g = DynGraph(4)
    store = init_store(g, 2000, 0.2, make_rng(1))
    assert np.abs(estimate(store) - 0.25).max() <= 0.02


def test_estimate_single_walk():
    g = DynGraph(2)
    g.add_edge(0, 1)
    store = store_from_walks(g, [0], [2], 0.2, make_rng(2))
    assert np.allclose(estimate(store), [2 / 3, 1 / 3])


def test_estimate_sums_to_one():
    g = _fixed_graph(12, seed=3)
    store = init_store(g, 20, 0.3, make_rng(4))
    assert abs(estimate(store).sum() - 1.0) <= 1e-12


# -- expected_visits oracle ----------------------------------------------------


def test_expected_visits_isolated_geometric_series():
    g = DynGraph(1)
    counts = expected_visits(g, 0.2, 0)
    assert abs(counts[0] - 5.0) <= 1e-9  # 1/eps


def test_expected_visits_forced_path():
    g = DynGraph(2)
    g.add_edge(0, 1)
    counts = expected_visits(g, 0.2, 0)
    # walk alternates 0,1,0,1,...: count(1) = sum over odd t of 0.8**t
    assert abs(counts[1] - 0.8 / (1 - 0.64)) <= 1e-9
    assert abs(counts[0] - 1.0 / (1 - 0.64)) <= 1e-9
    assert abs(counts.sum() - 5.0) <= 1e-9


def test_expected_visits_total_mass():
    g = _fixed_graph(15, seed=5)
    for s in (0, 7, 14):
        counts = expected_visits(g, 0.35, s)
        assert abs(counts.sum() - 1 / 0.35) <= 1e-9


def test_expected_visits_validates():
    g = DynGraph(2)
    with pytest.raises(ValueError):
        expected_visits(g, 0.0, 0)
    with pytest.raises(ValueError):
        expected_visits(g, 0.2, 5)


def test_aggregate_oracle_normalized():
    g = _fixed_graph(9, seed=6)
    scores = aggregate_oracle(g, 0.2)
    assert abs(scores.sum() - 1.0) <= 1e-12
    assert scores.min() > 0


def test_estimator_converges_to_oracle_like_sqrt_R():
    g = _fixed_graph(10, seed=7)
    exact = aggregate_oracle(g, 0.2)
    ratios = []
    for seed in range(10):
        tvs = []
        for R in (10, 100, 1000):
            store = init_store(g, R, 0.2, make_rng((seed, R)))
            tvs.append(total_variation(estimate(store), exact))
        ratios += [tvs[1] / tvs[0], tvs[2] / tvs[1]]
    # 10x more walks should shrink TV by about sqrt(10)
    assert 0.2 <= np.mean(ratios) <= 0.5


def test_scores_csv_format():
    g = DynGraph(2)
    g.add_edge(0, 1)
    store = store_from_walks(g, [0], [2], 0.2, make_rng(8))
    buf = io.StringIO()
    write_scores_csv(estimate(store), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "node,score"
    assert len(lines) == 3
    node, score = lines[1].split(",")
    assert node == "0" and abs(float(score) - 2 / 3) < 1e-9
