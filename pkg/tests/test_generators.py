import numpy as np
import pytest
from scipy.stats import chisquare

from dynbsuitor import gen_b_function, gen_gnp, gen_rmat, sample_insert_batch, sample_remove_batch
from dynbsuitor.errors import NotEnoughCandidatesError
from dynbsuitor.generators import make_rng, parse_b_spec, rmat_draws


def test_gnp_extremes():
    assert gen_gnp(10, 0.0, seed=1).m == 0
    g = gen_gnp(4, 1.0, seed=1)
    assert g.m == 6
    with pytest.raises(ValueError):
        gen_gnp(4, 1.5)


def test_gnp_deterministic_and_valid():
    a = gen_gnp(256, 0.05, seed=42)
    b = gen_gnp(256, 0.05, seed=42)
    assert a == b and a.check_symmetry()
    assert gen_gnp(256, 0.05, seed=43) != a
    ws = [w for _, _, w in a.edges()]
    assert 0 < min(ws) and max(ws) <= 1.0
    # expected 0.05 * 256*255/2 = 1632 edges
    assert abs(a.m - 1632) < 4 * (1632 * 0.95) ** 0.5


def test_gnp_weight_range():
    g = gen_gnp(30, 0.5, weight_range=(2.0, 3.0), seed=0)
    assert all(2.0 < w <= 3.0 for _, _, w in g.edges())


def test_rmat_small():
    g = gen_rmat(4, 2, seed=0)
    assert g.n == 16 and g.m <= 32 and g.check_symmetry()
    assert gen_rmat(4, 2, seed=0) == g
    with pytest.raises(ValueError):
        gen_rmat(4, 2, probs=(0.5, 0.5, 0.5, 0.5))


def test_rmat_er_quadrants_uniform():
    src, dst = rmat_draws(make_rng(123), 10, 8 * 1024, (0.25, 0.25, 0.25, 0.25))
    half = 512
    quad = (src >= half) * 2 + (dst >= half)
    counts = np.bincount(quad, minlength=4)
    assert chisquare(counts).pvalue > 0.01
    g = gen_rmat(10, 8, "er", seed=7)
    codes = np.array([(u >= half) * 2 + (v >= half) for u, v, _ in g.edges()])
    counts = np.bincount(codes, minlength=4)
    # u < v, so the lower-left quadrant is empty; the rest follow 1:2:1
    expected = np.array([0.25, 0.5, 0.0, 0.25]) * counts.sum()
    assert counts[2] == 0
    assert chisquare(counts[[0, 1, 3]], expected[[0, 1, 3]]).pvalue > 0.01


def test_rmat_skewed_preset_concentrates():
    g = gen_rmat(8, 8, "b", seed=1)
    deg = sorted((g.degree(u) for u in range(g.n)), reverse=True)
    assert deg[0] > 4 * np.median(deg)


def test_insert_batch_avoids_existing_edges():
    for seed in range(10):
        g = gen_gnp(20, 0.4, seed=seed)
        batch = sample_insert_batch(g, 15, seed=seed)
        pairs = {(u, v) for u, v, _ in batch}
        assert len(pairs) == 15
        assert all(u < v and not g.has_edge(u, v) for u, v in pairs)
    assert sample_insert_batch(g, 0) == []
    full = gen_gnp(5, 1.0)
    with pytest.raises(NotEnoughCandidatesError):
        sample_insert_batch(full, 1)


def test_insert_batch_rejection_path():
    g = gen_rmat(11, 4, seed=3)  # 2048 nodes, large candidate space
    batch = sample_insert_batch(g, 200, seed=1)
    assert len({(u, v) for u, v, _ in batch}) == 200
    assert not any(g.has_edge(u, v) for u, v, _ in batch)
    assert batch == sample_insert_batch(g, 200, seed=1)


def test_remove_batch():
    g = gen_gnp(12, 0.5, seed=0)
    assert sorted(sample_remove_batch(g, g.m, seed=1)) == [(u, v) for u, v, _ in g.edges()]
    assert sample_remove_batch(g, 0) == []
    with pytest.raises(NotEnoughCandidatesError):
        sample_remove_batch(g, g.m + 1)


def test_b_functions():
    assert gen_b_function(5, "const:1") == (1,) * 5
    assert gen_b_function(5, 3) == (3,) * 5
    vals = gen_b_function(500, "uniform:1,10", seed=4)
    assert min(vals) >= 1 and max(vals) <= 10 and len(set(vals)) == 10
    assert vals == gen_b_function(500, "uniform:1,10", seed=4)
    assert parse_b_spec("uniform:2,5") == ("uniform", 2, 5)
    with pytest.raises(ValueError):
        parse_b_spec("bogus")
    with pytest.raises(ValueError):
        gen_b_function(3, "const:0")
