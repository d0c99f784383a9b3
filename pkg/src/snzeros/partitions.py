"""Integer partitions: validation, enumeration and exact counting.

A partition is represented as a plain tuple of positive ints in weakly
decreasing order; ``()`` is the unique partition of 0.  Tuples are
immutable and hashable, which is all the rest of the package needs from a
value type.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Iterator

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "PartitionError",
    "P_EXACT_LIMIT",
    "as_partition",
    "bounded_count",
    "conjugate",
    "enumerate_partitions",
    "iter_partitions",
    "largest_part",
    "largest_part_counts",
    "length",
    "multiplicities",
    "partition_count",
    "partition_counts",
    "size",
]


class PartitionError(ValueError):
    """Raised for sequences that are not partitions."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise PartitionError(f"parts must be positive: {lam}")
        if i and p > lam[i - 1]:
            raise PartitionError(f"parts must be weakly decreasing: {lam}")
    return lam


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def largest_part(lam: Partition) -> int:
    return lam[0] if lam else 0


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part size -> number of occurrences, in decreasing part order."""
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    out = []
    i = len(lam)
    for j in range(1, lam[0] + 1):
        while lam[i - 1] < j:
            i -= 1
        out.append(i)
    return tuple(out)


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    Starts at ``(n,)`` and ends at ``(1,) * n``.
    """
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    # Standard successor rule on a working list: strip trailing ones, lower
    # the last part > 1 by one and refill greedily with it.
    a = [n]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        v = a.pop()
        k = v - 1
        rem = v + ones
        while rem >= k:
            a.append(k)
            rem -= k
        if rem:
            a.append(rem)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` as a list, in canonical (reverse-lex) order."""
    return list(iter_partitions(n))


_P_CACHE: list[int] = [1]
_P_LOCK = threading.Lock()


def _extend_cache(n: int) -> None:
    # Euler's pentagonal recurrence, F(z) * prod(1 - z^k) = 1.
    with _P_LOCK:
        p = _P_CACHE
        for m in range(len(p), n + 1):
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                g2 = g1 + k
                term = p[m - g1]
                if g2 <= m:
                    term += p[m - g2]
                if k & 1:
                    total += term
                else:
                    total -= term
                k += 1
            p.append(total)


# beyond this the pentagonal table is slower than one Rademacher evaluation
PENTAGONAL_MAX = 20000
# Rademacher cost grows roughly linearly; 1e9 takes a few seconds
P_EXACT_LIMIT = 10**9


def _rademacher(n: int) -> int:
    from sympy.functions.combinatorial.numbers import partition

    return int(partition(n))


def partition_count(n: int) -> int:
    """Exact p(n).

    Values up to ``PENTAGONAL_MAX`` (or up to the largest cached ``n``) come
    from the cached pentagonal table; larger ``n`` use the exact Rademacher
    series, up to ``P_EXACT_LIMIT``.
    """
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if n < len(_P_CACHE):
        return _P_CACHE[n]
    if n <= PENTAGONAL_MAX:
        _extend_cache(n)
        return _P_CACHE[n]
    if n > P_EXACT_LIMIT:
        raise PartitionError(f"exact p(n) is limited to n <= {P_EXACT_LIMIT}, got {n}")
    return _rademacher(n)


def partition_counts(n: int) -> list[int]:
    """``[p(0), ..., p(n)]``."""
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if n >= len(_P_CACHE):
        _extend_cache(n)
    return _P_CACHE[: n + 1]


def bounded_count(n: int, k: int) -> int:
    """Number of partitions of ``n`` with every part at most ``k``."""
    if n < 0 or k < 0:
        raise PartitionError(f"n and k must be nonnegative, got {(n, k)}")
    if n == 0:
        return 1
    counts = [1] + [0] * n
    for part in range(1, min(k, n) + 1):
        for m in range(part, n + 1):
            counts[m] += counts[m - part]
    return counts[n]


def largest_part_counts(n: int) -> list[int]:
    """``out[t] = #{mu |- n : mu_1 = t}`` for ``t = 0..n``.

    One in-place pass of the bounded-parts recurrence: after admitting part
    size ``t`` the working array holds ``bounded_count(., t)``.
    """
    out = [0] * (n + 1)
    if n == 0:
        out[0] = 1
        return out
    counts = [1] + [0] * n
    for t in range(1, n + 1):
        for m in range(t, n + 1):
            counts[m] += counts[m - t]
        out[t] = counts[n - t]
    return out
