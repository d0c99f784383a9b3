"""Hook lengths, t-cores and divisibility statistics of parts.

For a partition ``lam`` and ``t >= 1``:

* ``hooks_div(lam, t)`` is the number of boxes whose hook length is a
  multiple of ``t``;
* ``parts_div_sum(mu, t)`` is ``(1/t) * sum of the parts of mu divisible by t``;
* ``parts_div_count(mu, t)`` is the number of those parts.

``lam`` is a t-core when ``hooks_div(lam, t) == 0``.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from . import kernels
from .partitions import Partition, conjugate, iter_partitions

__all__ = [
    "CORE_ENUMERATION_LIMIT",
    "SizeGuardError",
    "beta_hooks_div",
    "beta_set",
    "core_count_exact",
    "from_beta_set",
    "hook_histogram",
    "hook_lengths",
    "hooks_div",
    "is_core",
    "is_core_direct",
    "parts_div_count",
    "parts_div_sum",
]

CORE_ENUMERATION_LIMIT = 45


class SizeGuardError(ValueError):
    """An exhaustive computation was requested above its configured bound."""


def _arr(lam: Partition) -> np.ndarray:
    return np.asarray(lam, dtype=np.int64)


def hook_lengths(lam: Partition) -> list[int]:
    """Row-major list of hook lengths, ``h(i, j) = lam_i - j + lam'_j - i + 1``."""
    conj = conjugate(lam)
    return [
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def hook_histogram(lam: Partition) -> Counter:
    """Multiset of hook lengths as ``Counter({h: multiplicity})``."""
    hist = kernels.hook_hist(_arr(lam))
    return Counter({h: int(c) for h, c in enumerate(hist.tolist()) if c})


def hooks_div(lam: Partition, t: int) -> int:
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    n = sum(lam)
    if t > n:
        return 0
    return int(kernels.stride_sum(kernels.hook_hist(_arr(lam)), t))


def beta_set(lam: Partition) -> tuple[int, ...]:
    """First-column hook lengths ``lam_i + ell - i``, increasing."""
    ell = len(lam)
    return tuple(lam[ell - 1 - i] + i for i in range(ell))


def from_beta_set(betas) -> Partition:
    """Inverse of :func:`beta_set`; also accepts padded beta sets.

    Padding ``{0, 1, .., k-1} + (betas shifted by k)`` yields the same
    partition, so leading zeros of the result are dropped.
    """
    b = sorted(int(x) for x in betas)
    if len(set(b)) != len(b) or (b and b[0] < 0):
        raise ValueError(f"not a beta set: {betas}")
    parts = [bi - i for i, bi in enumerate(b)]
    return tuple(p for p in reversed(parts) if p > 0)


def beta_hooks_div(lam: Partition, t: int) -> int:
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return int(kernels.beta_hooks_div(np.asarray(beta_set(lam), dtype=np.int64), t))


def is_core(lam: Partition, t: int) -> bool:
    """Abacus test: every bead ``b >= t`` has a bead at ``b - t``."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return bool(kernels.is_core_beta(np.asarray(beta_set(lam), dtype=np.int64), t))


def is_core_direct(lam: Partition, t: int) -> bool:
    return hooks_div(lam, t) == 0


def parts_div_sum(mu: Partition, t: int) -> int:
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return sum(p for p in mu if p % t == 0) // t


def parts_div_count(mu: Partition, t: int) -> int:
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return sum(1 for p in mu if p % t == 0)


def core_count_exact(n: int, t: int, limit: int = CORE_ENUMERATION_LIMIT) -> int:
    """Count t-cores of ``n`` by enumerating every partition of ``n``."""
    if n > limit:
        raise SizeGuardError(f"core_count_exact: n={n} exceeds enumeration bound {limit}")
    if t > n:
        return sum(1 for _ in iter_partitions(n))
    return sum(1 for lam in iter_partitions(n) if is_core(lam, t))
