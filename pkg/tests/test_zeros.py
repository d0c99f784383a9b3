import random

import numpy as np
import pytest

from snzeros.characters import character, full_table
from snzeros.hooks import SizeGuardError
from snzeros.partitions import enumerate_partitions
from snzeros.zeros import (
    census,
    classify,
    condition_breakdown,
    pair_tables,
    poly_divides_direct,
    z1_exact,
)
from snzeros import kernels


def test_classify_examples():
    f = classify((2, 1, 1), (3, 1), with_character=True)
    assert (f.type_i, f.type_ii, f.type_iii, f.poly_flag) == (True, True, True, True)
    assert f.witness_t == 3 and f.is_zero is True
    g = classify((2, 2), (2, 1, 1), with_character=True)
    assert not (g.type_i or g.type_ii or g.type_iii or g.poly_flag)
    assert g.is_zero is True and g.witness_t is None
    h = classify((1,) * 7, (1,) * 7)
    assert not (h.type_i or h.type_ii or h.type_iii or h.poly_flag) and h.is_zero is None


def test_classify_errors():
    with pytest.raises(ValueError):
        classify((2,), (1,))
    with pytest.raises(ValueError):
        classify((), ())


def test_witness_is_smallest():
    order, hdiv, ptot, *_ = pair_tables(9)
    for a, lam in enumerate(order):
        for b, mu in enumerate(order):
            f = classify(lam, mu)
            ts = [t for t in range(2, 10) if ptot[b, t] > hdiv[a, t]]
            assert f.witness_t == (ts[0] if ts else None)


def test_chain_per_pair_to_18():
    for n in range(1, 19):
        order, hdiv, ptot, pcnt, mu1, mask = pair_tables(n)
        f = kernels.pair_flags(hdiv, ptot, pcnt, mu1, mask)
        assert np.all(f[:, :, 0] <= f[:, :, 1])
        assert np.all(f[:, :, 1] <= f[:, :, 3])
        assert np.all(f[:, :, 3] <= f[:, :, 2])


def test_poly_divisibility_matches_flag_to_12():
    for n in range(1, 13):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                assert poly_divides_direct(lam, mu) == (not classify(lam, mu).poly_flag)


def test_poly_examples():
    assert not poly_divides_direct((2, 1, 1), (3, 1))
    assert poly_divides_direct((9,), (9,))
    with pytest.raises(SizeGuardError):
        poly_divides_direct((31,), (31,))


def test_census_small():
    c = census(4, with_characters=True)
    assert (c.z1, c.z2, c.z3, c.z_total, c.total_pairs) == (3, 3, 3, 4, 25)
    assert c.unexplained == 1
    c1 = census(1, with_characters=True)
    assert (c1.z1, c1.z2, c1.z3, c1.z_poly, c1.z_total) == (0, 0, 0, 0, 0)


def test_census_chain_to_20():
    for n in range(1, 21):
        c = census(n, with_characters=n <= 16)
        top = c.z_total if c.z_total is not None else c.total_pairs
        assert c.z1 <= c.z2 <= c.z_poly <= c.z3 <= top <= c.total_pairs


def test_soundness_sampled_15_to_20():
    rng = random.Random(20)
    for n in range(15, 21):
        parts = enumerate_partitions(n)
        for _ in range(150):
            lam, mu = rng.choice(parts), rng.choice(parts)
            if classify(lam, mu).type_iii:
                assert character(lam, mu) == 0


def test_census_workers_identical():
    assert census(12, workers=1) == census(12, workers=3)


def test_census_guard():
    with pytest.raises(SizeGuardError):
        census(23, with_characters=True)
    with pytest.raises(SizeGuardError):
        census(29)


def test_z1_exact():
    assert z1_exact(4) == 3
    assert z1_exact(1) == 0
    for n in range(1, 19):
        assert z1_exact(n) == census(n, conditions=False).z1
    with pytest.raises(SizeGuardError):
        z1_exact(4001)


def test_conditions_union_is_z3():
    for n in range(1, 17):
        c = census(n)
        assert c.conditions["union"] == c.z3
        assert sum(v for k, v in c.conditions_exclusive.items() if k != "union") == c.z3
        assert c.convention == "clamped thresholds"
    inc, exc = condition_breakdown(1)
    assert all(v == 0 for v in inc.values()) and all(v == 0 for v in exc.values())
    with pytest.raises(SizeGuardError):
        condition_breakdown(23)


def test_exclusive_never_exceeds_inclusive():
    inc, exc = condition_breakdown(14)
    for k in inc:
        assert exc[k] <= inc[k]
