import math

import pytest

from snzeros.characters import (
    CharTable,
    centralizer_size,
    character,
    column,
    dimension,
    full_table,
    rim_hooks,
)
from snzeros.hooks import SizeGuardError, hook_histogram, is_core
from snzeros.partitions import enumerate_partitions, iter_partitions


def test_rim_hook_examples():
    hooks = sorted(rim_hooks((2, 2), 2), key=lambda h: h.height)
    assert [(h.height, h.remainder) for h in hooks] == [(0, (2,)), (1, (1, 1))]
    (h,) = rim_hooks((5,), 5)
    assert (h.length, h.height, h.remainder) == (5, 0, ())


def test_strip_hook_bijection():
    for n in range(1, 21):
        for lam in iter_partitions(n):
            hist = hook_histogram(lam)
            for t in range(1, n + 1):
                strips = rim_hooks(lam, t)
                assert len(strips) == hist.get(t, 0)
                assert all(sum(s.remainder) == n - t for s in strips)
                assert (not strips) == is_core(lam, t)


def test_character_examples():
    assert character((2, 2), (1, 1, 1, 1)) == 2
    assert character((2, 1, 1), (3, 1)) == 0
    assert character((), ()) == 1
    for n in range(1, 13):
        for mu in iter_partitions(n):
            assert character((n,), mu) == 1


def test_sign_character():
    for n in range(1, 11):
        for mu in iter_partitions(n):
            assert character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_size_mismatch():
    with pytest.raises(ValueError):
        character((2,), (1,))


def test_dimension_counts_tableaux():
    assert dimension((2, 2)) == 2
    assert dimension((3, 2)) == 5
    assert sum(dimension(l) ** 2 for l in iter_partitions(7)) == math.factorial(7)


def test_centralizer():
    assert centralizer_size((1,) * 6) == math.factorial(6)
    assert centralizer_size((7,)) == 7
    assert centralizer_size((2, 1, 1)) == 4
    for n in range(1, 10):
        assert sum(math.factorial(n) // centralizer_size(m) for m in iter_partitions(n)) == math.factorial(n)


def test_small_tables():
    assert full_table(1).values == ((1,),)
    # rows lambda, columns mu, both in order (2), (1,1)
    assert full_table(2).values == ((1, 1), (-1, 1))
    t4 = full_table(4)
    assert len(t4.values) == 5 and t4.zero_count() == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    t = full_table(n)
    for j, mu in enumerate(t.order):
        for k, nu in enumerate(t.order):
            s = sum(row[j] * row[k] for row in t.values)
            assert s == (centralizer_size(mu) if j == k else 0)


def test_degree_sum_of_squares():
    for n in range(1, 11):
        t = full_table(n)
        ones = t.order.index((1,) * n)
        assert sum(row[ones] ** 2 for row in t.values) == math.factorial(n)
        assert all(row[ones] > 0 for row in t.values)


def test_type_i_zeros_vanish_to_14():
    for n in range(1, 15):
        t = full_table(n)
        for i, lam in enumerate(t.order):
            for j, mu in enumerate(t.order):
                if is_core(lam, mu[0]):
                    assert t.values[i][j] == 0


def test_column_matches_memoized_character():
    rows = enumerate_partitions(9)
    for mu in rows:
        assert column(mu, rows) == [character(l, mu) for l in rows]


def test_workers_do_not_change_table():
    base = full_table(12, workers=1)
    assert full_table(12, workers=2) == base
    assert full_table(12, workers=8) == base


def test_guard():
    with pytest.raises(SizeGuardError):
        full_table(27)
    assert isinstance(full_table(3), CharTable)
