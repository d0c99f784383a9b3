"""Certified zeros of the character table of S_N.

A pair ``(lam, mu)`` of partitions of N is

* type I   if ``lam`` is a ``mu_1``-core,
* type II  if ``lam`` is a t-core for some part ``t`` of ``mu``,
* type III if ``P_t(mu) > H_t(lam)`` for some ``t >= 2`` (Stanley's criterion),

and carries the polynomial flag when some ``t >= 2`` has more parts of
``mu`` divisible by ``t`` than hooks of ``lam`` divisible by ``t``, i.e.
``prod (1 - x^{mu_i})`` does not divide ``prod (1 - x^{h(u)})``.  Per pair
``type I => type II => poly => type III => chi = 0``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels
from .asymptotics import clamped_thresholds
from .characters import character, default_workers, full_table
from .hooks import SizeGuardError, hook_lengths
from .partitions import Partition, enumerate_partitions, largest_part_counts, partition_counts
from .series import tcore_coefficient

__all__ = [
    "CENSUS_CHAR_LIMIT",
    "CENSUS_FLAG_LIMIT",
    "CONDITION_LIMIT",
    "CONDITION_NAMES",
    "PairFlags",
    "ZeroCensus",
    "census",
    "classify",
    "condition_breakdown",
    "pair_tables",
    "poly_divides_direct",
    "z1_exact",
]

CENSUS_CHAR_LIMIT = 22
CENSUS_FLAG_LIMIT = 28
CONDITION_LIMIT = 22
POLY_LIMIT = 30
Z1_LIMIT = 4000
CONDITION_NAMES = ("i", "ii", "iii", "iv", "v")
THRESHOLD_CONVENTION = "clamped thresholds"


@dataclass(frozen=True)
class PairFlags:
    type_i: bool
    type_ii: bool
    type_iii: bool
    poly_flag: bool
    witness_t: int | None = None
    is_zero: bool | None = None


def _check_pair(lam: Partition, mu: Partition) -> int:
    n = sum(lam)
    if n != sum(mu):
        raise ValueError(f"size mismatch: |lambda|={n} but |mu|={sum(mu)}")
    if n < 1:
        raise ValueError("classification needs N >= 1")
    return n


def classify(lam: Partition, mu: Partition, with_character: bool = False) -> PairFlags:
    _check_pair(lam, mu)
    f = kernels.classify(np.asarray(lam, dtype=np.int64), np.asarray(mu, dtype=np.int64))
    return PairFlags(
        type_i=bool(f[0]),
        type_ii=bool(f[1]),
        type_iii=bool(f[2]),
        poly_flag=bool(f[3]),
        witness_t=int(f[4]) or None,
        is_zero=(character(lam, mu) == 0) if with_character else None,
    )


# --------------------------------------------------------------------------
# literal polynomial divisibility


def _poly_product_one_minus(exponents) -> list[int]:
    poly = [1]
    for e in exponents:
        new = poly + [0] * e
        for i, c in enumerate(poly):
            new[i + e] -= c
        poly = new
    return poly


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # long division over Z; den's leading coefficient is +-1
    num = list(num)
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if not c:
            continue
        if c % lead:
            raise ArithmeticError("divisor leading coefficient is not a unit")
        qc = c // lead
        quot[k - dd] = qc
        for j, dj in enumerate(den):
            num[k - dd + j] -= qc * dj
    rem = num[:dd] or [0]
    return quot, rem


def poly_divides_direct(lam: Partition, mu: Partition, limit: int = POLY_LIMIT) -> bool:
    """Whether ``prod_i (1 - x^{mu_i})`` divides ``prod_u (1 - x^{h(u)})`` in Z[x]."""
    n = _check_pair(lam, mu)
    if n > limit:
        raise SizeGuardError(f"poly_divides_direct: N={n} exceeds bound {limit}")
    num = _poly_product_one_minus(hook_lengths(lam))
    den = _poly_product_one_minus(mu)
    _, rem = _poly_divmod(num, den)
    return not any(rem)


# --------------------------------------------------------------------------
# exact census over all pairs


def pair_tables(n: int):
    """Per-partition statistics over ``t = 0..n`` used by the all-pairs scans.

    Returns ``(order, hdiv, ptot, pcnt, mu1, partmask)``; see
    :mod:`snzeros.kernels` for the meaning of each table.
    """
    order = enumerate_partitions(n)
    p = len(order)
    width = n + 1
    hdiv = np.zeros((p, width), dtype=np.int64)
    ptot = np.zeros((p, width), dtype=np.int64)
    pcnt = np.zeros((p, width), dtype=np.int64)
    mu1 = np.zeros(p, dtype=np.int64)
    partmask = np.zeros((p, width), dtype=bool)
    for a, lam in enumerate(order):
        hist = kernels.hook_hist(np.asarray(lam, dtype=np.int64))
        for t in range(1, width):
            hdiv[a, t] = hist[t::t].sum()
        mu1[a] = lam[0] if lam else 0
        for k in lam:
            partmask[a, k] = True
        for t in range(1, width):
            divisible = [k for k in lam if k % t == 0]
            ptot[a, t] = sum(divisible) // t
            pcnt[a, t] = len(divisible)
    return order, hdiv, ptot, pcnt, mu1, partmask


def _flag_block(args):
    hdiv, ptot, pcnt, mu1, partmask, cols = args
    return kernels.pair_flags(hdiv, ptot[cols], pcnt[cols], mu1[cols], partmask[cols])


def _all_flags(tables, workers: int, block: int = 256) -> np.ndarray:
    _, hdiv, ptot, pcnt, mu1, partmask = tables
    p = hdiv.shape[0]
    blocks = [np.arange(s, min(s + block, p)) for s in range(0, p, block)]
    jobs = [(hdiv, ptot, pcnt, mu1, partmask, cols) for cols in blocks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_flag_block, jobs))
    else:
        parts = [_flag_block(j) for j in jobs]
    return np.concatenate(parts, axis=1) if parts else np.zeros((p, 0, 5), dtype=np.int16)


@dataclass
class ZeroCensus:
    n: int
    total_pairs: int
    z1: int
    z2: int
    z3: int
    z_poly: int
    z_total: int | None = None
    conditions: dict[str, int] | None = None
    conditions_exclusive: dict[str, int] | None = None
    convention: str | None = None
    unexplained: int | None = field(default=None)

    def as_dict(self) -> dict:
        return asdict(self)


class SoundnessError(AssertionError):
    """A type-III flagged pair has a nonzero character value."""


def census(
    n: int,
    with_characters: bool = False,
    workers: int | None = None,
    conditions: bool | None = None,
) -> ZeroCensus:
    """Exact counts of type I/II/III and polynomial-flag pairs at N.

    With ``with_characters`` the full table is computed, ``z_total`` is
    filled in and every type-III pair is checked to be a true zero.
    The condition breakdown is included by default when ``N <= 22``.
    """
    if n < 1:
        raise ValueError(f"census needs N >= 1, got {n}")
    limit = CENSUS_CHAR_LIMIT if with_characters else CENSUS_FLAG_LIMIT
    if n > limit:
        raise SizeGuardError(f"census: N={n} exceeds bound {limit}")
    workers = default_workers() if workers is None else max(1, workers)
    tables = pair_tables(n)
    flags = _all_flags(tables, workers)
    p = len(tables[0])
    out = ZeroCensus(
        n=n,
        total_pairs=p * p,
        z1=int(flags[:, :, 0].sum()),
        z2=int(flags[:, :, 1].sum()),
        z3=int(flags[:, :, 2].sum()),
        z_poly=int(flags[:, :, 3].sum()),
    )
    if with_characters:
        zero = full_table(n, workers=workers).zero_mask()
        bad = (flags[:, :, 2] == 1) & ~zero
        if bad.any():
            a, b = np.argwhere(bad)[0]
            raise SoundnessError(
                f"type III pair with nonzero character: {tables[0][a]}, {tables[0][b]}"
            )
        out.z_total = int(zero.sum())
        out.unexplained = out.z_total - out.z3
    if conditions is None:
        conditions = n <= CONDITION_LIMIT
    if conditions:
        inclusive, exclusive = _conditions_from(n, tables, flags)
        out.conditions = inclusive
        out.conditions_exclusive = exclusive
        out.convention = THRESHOLD_CONVENTION
    return out


# --------------------------------------------------------------------------
# attribution of type-III pairs to the five large-N conditions


def _condition_masks(n: int, tables, flags) -> dict[str, np.ndarray]:
    order, hdiv, ptot, _, _, _ = tables
    th = clamped_thresholds(n)
    t = np.arange(n + 1)
    low = (t >= 2) & (t <= th.t1)
    high = t > th.t1
    mid = (t > th.t1) & (t <= th.t2)
    big_parts = [[k for k in mu if k > th.t2] for mu in order]
    two_big = np.array([len(set(b)) >= 2 for b in big_parts])
    one_big = np.array([b[0] if len(b) == 1 else 0 for b in big_parts])

    h = hdiv[:, None, :]
    pm = ptot[None, :, :]
    cond_i = ((pm > h) & low).any(axis=2)
    cond_ii = np.broadcast_to(((ptot >= 2) & high).any(axis=1)[None, :], cond_i.shape)
    cond_iii = ((pm == 1) & (h == 0) & mid).any(axis=2)
    cond_iv = np.broadcast_to(two_big[None, :], cond_i.shape)
    # lam is a t-core iff H_t(lam) = 0; t = 0 marks "no unique big part"
    core_at = hdiv[:, one_big] == 0
    cond_v = core_at & (one_big > 0)[None, :]
    stanley = flags[:, :, 2] == 1
    masks = [cond_i, cond_ii, cond_iii, cond_iv, cond_v]
    return {name: m & stanley for name, m in zip(CONDITION_NAMES, masks)}


def _conditions_from(n, tables, flags):
    masks = _condition_masks(n, tables, flags)
    inclusive = {k: int(m.sum()) for k, m in masks.items()}
    union = np.zeros_like(next(iter(masks.values())))
    exclusive = {}
    for k, m in masks.items():
        fresh = m & ~union
        exclusive[k] = int(fresh.sum())
        union |= m
    inclusive["union"] = int(union.sum())
    exclusive["union"] = inclusive["union"]
    return inclusive, exclusive


def condition_breakdown(n: int) -> tuple[dict[str, int], dict[str, int]]:
    """Type-III pairs per condition (i)-(v), inclusive and first-match exclusive.

    Thresholds are floored at 2, since the raw T1 and T2 are negative at every
    N where exhaustive enumeration is possible.
    """
    if n < 1:
        raise ValueError(f"condition_breakdown needs N >= 1, got {n}")
    if n > CONDITION_LIMIT:
        raise SizeGuardError(f"condition_breakdown: N={n} exceeds bound {CONDITION_LIMIT}")
    tables = pair_tables(n)
    flags = _all_flags(tables, workers=1)
    return _conditions_from(n, tables, flags)


# --------------------------------------------------------------------------
# Z_I without pair enumeration


def z1_exact(n: int, limit: int = Z1_LIMIT) -> int:
    """``Z_I(N) = sum_t #{mu : mu_1 = t} * c_t(N)``."""
    if n < 1:
        raise ValueError(f"z1_exact needs N >= 1, got {n}")
    if n > limit:
        raise SizeGuardError(f"z1_exact: N={n} exceeds bound {limit}")
    p = partition_counts(n)
    firsts = largest_part_counts(n)
    total = 0
    for t in range(1, n + 1):
        total += firsts[t] * tcore_coefficient(t, n, p)
    return total
