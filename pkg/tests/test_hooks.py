from collections import Counter

import pytest
from hypothesis import given, strategies as st

from snzeros.hooks import (
    SizeGuardError,
    beta_hooks_div,
    beta_set,
    core_count_exact,
    from_beta_set,
    hook_histogram,
    hook_lengths,
    hooks_div,
    is_core,
    is_core_direct,
    parts_div_count,
    parts_div_sum,
)
from snzeros.partitions import iter_partitions, partition_count
from snzeros.series import tcore_series

from .strategies import partitions


def test_hook_histogram_examples():
    assert hook_histogram((2, 2)) == Counter({3: 1, 2: 2, 1: 1})
    assert hook_histogram((1,)) == Counter({1: 1})
    assert hook_histogram((6,)) == Counter({h: 1 for h in range(1, 7)})
    assert sorted(hook_lengths((2, 1, 1))) == [1, 1, 2, 4]


@given(partitions(max_n=40))
def test_histogram_is_multiset_of_hooks(lam):
    hist = hook_histogram(lam)
    assert sum(hist.values()) == sum(lam)
    assert hist == Counter(hook_lengths(lam))
    assert all(1 <= h <= sum(lam) for h in hist)


def test_hooks_div_examples():
    assert hooks_div((2, 2), 2) == 2
    assert hooks_div((2, 1, 1), 3) == 0
    for n in range(21):
        for lam in iter_partitions(n):
            assert hooks_div(lam, 1) == n


def test_hooks_div_from_histogram():
    for n in range(1, 21):
        for lam in iter_partitions(n):
            hist = hook_histogram(lam)
            for t in range(1, n + 1):
                assert hooks_div(lam, t) == sum(c for h, c in hist.items() if h % t == 0)


def test_beta_paths_exhaustive_to_30():
    for n in range(31):
        for lam in iter_partitions(n):
            for t in range(1, n + 1):
                h = hooks_div(lam, t)
                assert beta_hooks_div(lam, t) == h
                assert is_core(lam, t) == (h == 0)


def test_beta_examples():
    assert beta_hooks_div((2, 1, 1), 3) == 0
    assert beta_hooks_div((4, 3, 1), 9) == 0
    assert beta_set((3, 1)) == (1, 4)
    assert from_beta_set(beta_set((5, 2, 2))) == (5, 2, 2)


@given(partitions(max_n=30), st.integers(0, 5))
def test_beta_padding_invariance(lam, pad):
    betas = tuple(range(pad)) + tuple(b + pad for b in beta_set(lam))
    assert from_beta_set(betas) == lam


def test_from_beta_set_rejects_repeats():
    with pytest.raises(ValueError):
        from_beta_set((1, 1))


def test_is_core_examples():
    assert is_core((2, 1, 1), 3)
    for n in range(1, 16):
        assert not any(is_core((n,), t) for t in range(1, n + 1))
    assert is_core((3, 2), 6) and is_core((3, 2), 99)
    assert is_core_direct((2, 1, 1), 3)
    with pytest.raises(ValueError):
        is_core((1,), 0)


def test_parts_statistics():
    assert parts_div_sum((6, 4, 3, 2), 2) == 6
    assert parts_div_sum((4, 3, 2), 5) == 0
    assert parts_div_count((6, 4, 3, 2), 2) == 3
    assert parts_div_count((5, 5), 5) == 2
    for n in range(21):
        for mu in iter_partitions(n):
            assert parts_div_sum(mu, 1) == n
            assert parts_div_count(mu, 1) == len(mu)


def test_count_at_most_sum_to_30():
    for n in range(31):
        for mu in iter_partitions(n):
            for t in range(1, n + 1):
                assert parts_div_count(mu, t) <= parts_div_sum(mu, t)


def test_core_count_exact():
    assert core_count_exact(4, 3) == 2
    assert core_count_exact(10, 2) == 1
    assert core_count_exact(4, 2) == 0
    for n in range(21):
        assert core_count_exact(n, n + 1) == partition_count(n)
    with pytest.raises(SizeGuardError):
        core_count_exact(46, 2)


def test_core_count_matches_series():
    for t in range(1, 8):
        series = tcore_series(t, 24)
        assert [core_count_exact(n, t) for n in range(25)] == list(series.coeffs)
