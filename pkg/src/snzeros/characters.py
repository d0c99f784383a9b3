"""Irreducible characters of S_N by the Murnaghan-Nakayama rule.

Border strips are handled on beta sets: removing a strip of length ``t``
moves one bead from ``b`` to an empty position ``b - t``, and the strip's
height is the number of beads strictly between the two positions.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hooks import SizeGuardError, beta_set, from_beta_set, hook_lengths
from .partitions import Partition, enumerate_partitions, multiplicities

__all__ = [
    "TABLE_LIMIT",
    "CharTable",
    "RimHook",
    "centralizer_size",
    "character",
    "column",
    "default_workers",
    "dimension",
    "full_table",
    "rim_hooks",
]

TABLE_LIMIT = 26
WORKERS_ENV = "SNZEROS_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class RimHook:
    length: int
    height: int
    remainder: Partition


def _strip_moves(betas: tuple[int, ...], t: int):
    occ = set(betas)
    for idx, b in enumerate(betas):
        c = b - t
        if c < 0 or c in occ:
            continue
        height = 0
        for other in betas[:idx]:
            if other > c:
                height += 1
        new = betas[:idx] + betas[idx + 1 :]
        yield height, tuple(sorted(new + (c,)))


def rim_hooks(lam: Partition, t: int) -> list[RimHook]:
    """Every border strip of length ``t`` removable from ``lam``."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return [
        RimHook(t, height, from_beta_set(new))
        for height, new in _strip_moves(beta_set(lam), t)
    ]


def dimension(lam: Partition) -> int:
    """Degree of the character, ``n! / prod(hooks)``."""
    d = math.factorial(sum(lam))
    for h in hook_lengths(lam):
        d //= h
    return d


def _check_sizes(lam: Partition, mu: Partition) -> None:
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |lambda|={sum(lam)} but |mu|={sum(mu)}")


@lru_cache(maxsize=1 << 18)
def _character(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    if mu[0] == 1:
        return dimension(lam)
    rest = mu[1:]
    total = 0
    for h in rim_hooks(lam, mu[0]):
        v = _character(h.remainder, rest)
        total += -v if h.height & 1 else v
    return total


def character(lam: Partition, mu: Partition) -> int:
    """``chi^lam`` evaluated on the class of cycle type ``mu``."""
    _check_sizes(lam, mu)
    return _character(tuple(lam), tuple(mu))


def column(mu: Partition, rows: list[Partition]) -> list[int]:
    """``[chi^lam_mu for lam in rows]`` with a memo private to this column.

    Largest parts of ``mu`` are stripped first; the memo is keyed on the
    current shape (stored as its beta set) and the number of parts consumed.
    """
    k = len(mu)
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def value(betas: tuple[int, ...], i: int) -> int:
        if i == k:
            return 1
        key = (betas, i)
        got = memo.get(key)
        if got is not None:
            return got
        if mu[i] == 1:
            out = dimension(from_beta_set(betas))
        else:
            out = 0
            for height, new in _strip_moves(betas, mu[i]):
                v = value(_trim(new), i + 1)
                out += -v if height & 1 else v
        memo[key] = out
        return out

    return [value(beta_set(lam), 0) for lam in rows]


def _trim(betas: tuple[int, ...]) -> tuple[int, ...]:
    # drop the padding {0, .., j-1} so each shape has one canonical key
    j = 0
    while j < len(betas) and betas[j] == j:
        j += 1
    if not j:
        return betas
    return tuple(b - j for b in betas[j:])


def centralizer_size(mu: Partition) -> int:
    """``z_mu = prod_k k^{m_k} m_k!``."""
    z = 1
    for k, m in multiplicities(mu).items():
        z *= k**m * math.factorial(m)
    return z


@dataclass(frozen=True)
class CharTable:
    """``values[i][j] = chi^{order[i]}_{order[j]}`` in canonical order."""

    n: int
    order: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=object)

    def zero_mask(self) -> np.ndarray:
        return np.array([[v == 0 for v in row] for row in self.values], dtype=bool)

    def zero_count(self) -> int:
        return sum(v == 0 for row in self.values for v in row)


def _columns_job(args):
    mus, rows = args
    return [column(mu, rows) for mu in mus]


def full_table(n: int, workers: int | None = None, limit: int = TABLE_LIMIT) -> CharTable:
    """Exact character table of S_n; columns are split across processes."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > limit:
        raise SizeGuardError(f"full_table: n={n} exceeds bound {limit}")
    workers = default_workers() if workers is None else max(1, workers)
    order = enumerate_partitions(n)
    if workers == 1 or len(order) < 2:
        cols = [column(mu, order) for mu in order]
    else:
        # round-robin keeps the expensive long-part columns spread out
        chunks = [order[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_columns_job, [(c, order) for c in chunks]))
        cols = [None] * len(order)
        for w, block in enumerate(parts):
            for j, col in enumerate(block):
                cols[w + j * workers] = col
    values = tuple(tuple(cols[j][i] for j in range(len(order))) for i in range(len(order)))
    return CharTable(n=n, order=tuple(order), values=values)
