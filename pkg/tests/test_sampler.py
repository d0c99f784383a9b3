import math
import time
from collections import Counter

import numpy as np
import pytest
from scipy import stats

from snzeros import kernels
from snzeros.asymptotics import saddle_q
from snzeros.partitions import enumerate_partitions, largest_part_counts, partition_count
from snzeros.sampler import (
    SampleEstimate,
    SeedSpec,
    acceptance_rate,
    estimate_zero_types,
    exact_acceptance_rate,
    predicted_acceptance_rate,
    sample_partition,
    sample_partitions,
)
from snzeros.zeros import census


def chi_square_uniform(n, count, seed, method):
    samples, _ = sample_partitions(n, count, seed, method=method)
    obs = Counter(samples)
    parts = enumerate_partitions(n)
    assert set(obs) <= set(parts)
    expected = count / len(parts)
    stat = sum((obs.get(p, 0) - expected) ** 2 / expected for p in parts)
    return stat, stats.chi2.ppf(0.999, len(parts) - 1)


@pytest.mark.parametrize("method", ["rejection", "deferred"])
def test_uniform_at_4(method):
    stat, crit = chi_square_uniform(4, 100_000, SeedSpec(4), method)
    assert stat < crit


def test_samples_sum_to_n():
    for n in (1, 2, 7, 50, 333, 5000):
        for method in ("rejection", "deferred"):
            parts, trials = sample_partitions(n, 20, SeedSpec(n, 1), method=method)
            assert trials >= 20
            assert all(sum(p) == n and list(p) == sorted(p, reverse=True) and min(p) >= 1 for p in parts)


def test_largest_part_law_at_300():
    # goodness of fit of mu_1 against exact counts, both schemes
    n, count = 300, 20000
    exact = np.array(largest_part_counts(n), dtype=float) / partition_count(n)
    for method in ("rejection", "deferred"):
        parts, _ = sample_partitions(n, count, SeedSpec(11, 2), method=method)
        obs = np.bincount([p[0] for p in parts], minlength=n + 1).astype(float)
        exp = exact * count
        keep = exp >= 5
        o = np.append(obs[keep], obs[~keep].sum())
        e = np.append(exp[keep], exp[~keep].sum())
        stat = ((o - e) ** 2 / e).sum()
        assert stats.chi2.sf(stat, len(o) - 1) > 1e-4


def test_acceptance_rate_small_n():
    n, trials = 100, 200_000
    rate = acceptance_rate(n, trials, SeedSpec(5))
    exact = exact_acceptance_rate(n)
    assert abs(rate - exact) < 5 * math.sqrt(exact * (1 - exact) / trials)
    d = acceptance_rate(n, trials, SeedSpec(5), method="deferred")
    exact_d = exact_acceptance_rate(n, "deferred")
    assert abs(d - exact_d) < 5 * math.sqrt(exact_d * (1 - exact_d) / trials)


def test_exact_rate_near_prediction():
    for n in (100, 1000, 10000, 50000):
        r = exact_acceptance_rate(n) / predicted_acceptance_rate(n)
        assert 1 / 1.5 < r < 1.5
        # skipping the factor (1 - q) of Z_1 raises the rate by exactly 1 / (1 - q)
        gain = exact_acceptance_rate(n, "deferred") / exact_acceptance_rate(n)
        assert gain == pytest.approx(1 / (1 - saddle_q(n)), rel=1e-9)


def test_determinism_and_streams():
    a = sample_partitions(200, 10, SeedSpec(42, 3))
    assert a == sample_partitions(200, 10, SeedSpec(42, 3))
    assert a != sample_partitions(200, 10, SeedSpec(42, 4))
    assert a != sample_partitions(200, 10, SeedSpec(43, 3))
    assert sample_partition(200, SeedSpec(42, 3)) == a[0][0]


@pytest.mark.parametrize("method", ["rejection", "deferred"])
def test_jit_and_python_streams_identical(method):
    seed = SeedSpec(-7, 9)
    assert sample_partitions(60, 15, seed, method, jit=True) == sample_partitions(60, 15, seed, method, jit=False)
    e1 = estimate_zero_types(20, 40, seed, method, block=7, jit=True)
    e2 = estimate_zero_types(20, 40, seed, method, block=7, jit=False)
    assert e1 == e2
    assert acceptance_rate(80, 3000, seed, method, jit=True) == acceptance_rate(80, 3000, seed, method, jit=False)


def test_estimates_independent_of_workers_and_blocks():
    seed = SeedSpec(3, 1)
    base = estimate_zero_types(30, 600, seed, workers=1, block=600)
    assert estimate_zero_types(30, 600, seed, workers=2, block=50) == base
    assert estimate_zero_types(30, 600, seed, workers=1, block=7) == base


def test_estimate_invariants():
    e = estimate_zero_types(25, 3000, SeedSpec(8), method="deferred")
    assert e.type_i.hits <= e.type_ii.hits <= e.poly.hits <= e.type_iii.hits
    for est in (e.type_i, e.type_ii, e.type_iii, e.poly):
        assert est.n_samples == 3000 and est.n_trials >= est.n_samples
        p = est.proportion
        assert est.stderr == pytest.approx(math.sqrt(p * (1 - p) / 3000))


def test_estimate_matches_census_at_16():
    c = census(16, conditions=False)
    e = estimate_zero_types(16, 20000, SeedSpec(16), method="rejection")
    for name, z in (("type_i", c.z1), ("type_ii", c.z2), ("type_iii", c.z3), ("poly", c.z_poly)):
        est = getattr(e, name)
        assert abs(est.proportion - z / c.total_pairs) < 4 * est.stderr


def test_progress_callback():
    seen = []
    estimate_zero_types(10, 25, SeedSpec(1), block=10, progress=seen.append)
    assert seen == [10, 20, 25]


def test_sample_estimate_from_counts():
    s = SampleEstimate.from_counts(25, 100, 400)
    assert (s.proportion, s.stderr, s.hits) == (0.25, math.sqrt(0.25 * 0.75 / 100), 25)


def test_argument_checks():
    with pytest.raises(ValueError):
        sample_partition(0, SeedSpec(1))
    with pytest.raises(ValueError):
        estimate_zero_types(1, 10, SeedSpec(1))
    with pytest.raises(ValueError):
        estimate_zero_types(5, 0, SeedSpec(1))
    with pytest.raises(ValueError):
        sample_partition(5, SeedSpec(1), method="pdc")
    with pytest.raises(ValueError):
        SeedSpec(1, -1)
    with pytest.raises(ValueError):
        SeedSpec(1 << 64)


def test_classification_cost_at_50000():
    (lam, mu), _ = sample_partitions(50000, 2, SeedSpec(1), method="deferred")
    a, b = np.asarray(lam, dtype=np.int64), np.asarray(mu, dtype=np.int64)
    kernels.classify_jit(a, b)
    start = time.perf_counter()
    for _ in range(20):
        kernels.classify_jit(a, b)
    assert (time.perf_counter() - start) / 20 < 0.05
