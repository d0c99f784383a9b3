"""Truncated power series with exact integer coefficients.

Everything here is dense and uses Python ints, so identities between
generating functions can be checked for exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "BivariateTable",
    "IntSeries",
    "SeriesError",
    "euler_series",
    "han_table",
    "nondiv_series",
    "pentagonal_series",
    "series_inv_one_minus",
    "series_mul",
    "series_pow",
    "tcore_coefficient",
    "tcore_series",
]


class SeriesError(ValueError):
    """Degree-bound mismatch or invalid series operation."""


@dataclass(frozen=True)
class IntSeries:
    """``sum_{i <= degree} coeffs[i] z^i``, everything above ``degree`` dropped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], degree: int | None = None) -> "IntSeries":
        c = [int(x) for x in coeffs]
        if degree is not None:
            c = (c + [0] * (degree + 1))[: degree + 1]
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        return series_mul(self, other)

    def __pow__(self, k: int) -> "IntSeries":
        return series_pow(self, k)


def _check(a: IntSeries, b: IntSeries) -> int:
    if a.degree != b.degree:
        raise SeriesError(f"degree bounds differ: {a.degree} vs {b.degree}")
    return a.degree


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    d = _check(a, b)
    out = [0] * (d + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(d + 1 - i):
                bj = bc[j]
                if bj:
                    out[i + j] += ai * bj
    return IntSeries(tuple(out))


def series_inv_one_minus(n: int, degree: int) -> IntSeries:
    """``(1 - z^n)^(-1) = sum_j z^(jn)`` truncated at ``degree``."""
    if n < 1:
        raise SeriesError(f"n must be positive, got {n}")
    out = [0] * (degree + 1)
    for m in range(0, degree + 1, n):
        out[m] = 1
    return IntSeries(tuple(out))


def series_pow(a: IntSeries, k: int) -> IntSeries:
    """``a**k`` for ``k >= 0``.

    With constant term 1 this uses the recurrence from ``z B' A = k z A' B``,
    which is linear in the number of nonzero coefficients of ``a``; other
    inputs fall back to binary powering.
    """
    if k < 0:
        raise SeriesError("negative powers are not supported")
    d = a.degree
    if a.coeffs[0] == 1:
        nz = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
        b = [0] * (d + 1)
        b[0] = 1
        for n in range(1, d + 1):
            s = 0
            for j, c in nz:
                if j > n:
                    break
                s += ((k + 1) * j - n) * c * b[n - j]
            b[n] = s // n
        return IntSeries(tuple(b))
    result = IntSeries.from_coeffs([1], d)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def euler_series(degree: int) -> IntSeries:
    """``prod_n (1 - z^n)^(-1)``, expanded factor by factor."""
    c = [0] * (degree + 1)
    c[0] = 1
    for n in range(1, degree + 1):
        for m in range(n, degree + 1):
            c[m] += c[m - n]
    return IntSeries(tuple(c))


def pentagonal_series(degree: int) -> IntSeries:
    """``prod_n (1 - z^n)`` via Euler's pentagonal number theorem."""
    c = [0] * (degree + 1)
    c[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > degree:
            break
        sign = -1 if k & 1 else 1
        c[g1] += sign
        g2 = g1 + k
        if g2 <= degree:
            c[g2] += sign
        k += 1
    return IntSeries(tuple(c))


def _times_one_minus(c: list[int], step: int, reps: int) -> None:
    # in place: c <- c * (1 - z^step)^reps
    d = len(c) - 1
    for _ in range(reps):
        for m in range(d, step - 1, -1):
            c[m] -= c[m - step]


def tcore_series(t: int, degree: int) -> IntSeries:
    """``prod_n (1 - z^n)^(-1) (1 - z^(tn))^t``: coefficient N is c_t(N)."""
    if t < 1:
        raise SeriesError(f"t must be positive, got {t}")
    c = list(euler_series(degree).coeffs)
    for n in range(1, degree // t + 1):
        _times_one_minus(c, t * n, t)
    return IntSeries(tuple(c))


def tcore_coefficient(t: int, n: int, p_values: Sequence[int] | None = None) -> int:
    """c_t(n) alone, as ``sum_j g_j p(n - t j)`` with ``g = prod (1 - w^m)^t``.

    ``p_values`` may supply ``[p(0), ..., p(n)]`` to avoid recomputation.
    """
    if t < 1:
        raise SeriesError(f"t must be positive, got {t}")
    if p_values is None:
        p_values = euler_series(n).coeffs
    g = series_pow(pentagonal_series(n // t), t).coeffs
    return sum(gj * p_values[n - t * j] for j, gj in enumerate(g) if gj)


@dataclass(frozen=True)
class BivariateTable:
    """``entries[N][k]`` = coefficient of ``z^N w^k``; ``k <= w_degree``."""

    t: int
    z_degree: int
    w_degree: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, n: int) -> tuple[int, ...]:
        return self.entries[n]

    def w_at_one(self) -> IntSeries:
        return IntSeries(tuple(sum(row) for row in self.entries))

    def w_at_zero(self) -> IntSeries:
        return IntSeries(tuple(row[0] for row in self.entries))


def han_table(t: int, z_degree: int) -> BivariateTable:
    """Coefficients of ``sum_lam z^|lam| w^{H_t(lam)}`` via Han's product.

    ``prod_n (1-z^n)^(-1) (1-z^(tn))^t / (1 - w^n z^(tn))^t``, with the
    w-degree truncated at ``z_degree // t`` (H_t(lam) <= |lam|/t).
    """
    if t < 1:
        raise SeriesError(f"t must be positive, got {t}")
    kmax = z_degree // t
    # rows[k] is the z-series multiplying w^k
    rows = [list(tcore_series(t, z_degree).coeffs)] + [[0] * (z_degree + 1) for _ in range(kmax)]
    for n in range(1, kmax + 1):
        step = t * n
        for _ in range(t):
            # multiply by 1/(1 - w^n z^step): ascending order reuses updated terms
            for k in range(n, kmax + 1):
                src = rows[k - n]
                dst = rows[k]
                for m in range(step, z_degree + 1):
                    v = src[m - step]
                    if v:
                        dst[m] += v
    entries = tuple(tuple(rows[k][m] for k in range(kmax + 1)) for m in range(z_degree + 1))
    return BivariateTable(t=t, z_degree=z_degree, w_degree=kmax, entries=entries)


def nondiv_series(t: int, degree: int) -> IntSeries:
    """``prod_{t does not divide m} (1 - z^m)^(-1)``: partitions avoiding multiples of t."""
    if t < 2:
        raise SeriesError(f"t must be at least 2, got {t}")
    c = [0] * (degree + 1)
    c[0] = 1
    for m in range(1, degree + 1):
        if m % t:
            for s in range(m, degree + 1):
                c[s] += c[s - m]
    return IntSeries(tuple(c))
