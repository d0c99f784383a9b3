"""Analytic predictors around the saddle point q = exp(-pi / sqrt(6N)).

All real arithmetic is double precision.  Quantities that overflow a double
for large N (p(N) and its Hardy-Ramanujan estimates beyond N ~ 7e4) are also
available as natural logarithms.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import mpmath
import numpy as np
from scipy import integrate

from .partitions import P_EXACT_LIMIT, partition_count

__all__ = [
    "AsymptoticReport",
    "DomainError",
    "Thresholds",
    "clamped_thresholds",
    "condition_v_closedform",
    "condition_v_quadrature",
    "core_count_approx",
    "hr_estimates",
    "hr_log_estimates",
    "lambert_log_closed",
    "lambert_log_sum",
    "leading_proportion",
    "log_partition_count",
    "log_inv_q",
    "logF_at_q",
    "part_count_approx",
    "refined_integral",
    "report",
    "saddle_q",
    "saddle_sum",
    "sigma",
    "sigma_table",
    "thresholds",
]

SERIES_RTOL = 1e-15
SERIES_MAX_TERMS = 10**7
THRESHOLD_FLOOR = 2.0


class DomainError(ValueError):
    """Argument outside the range where a formula is defined."""


def log_inv_q(n: float) -> float:
    """``log(1/q) = pi / sqrt(6N)``."""
    if n < 1:
        raise DomainError(f"N must be at least 1, got {n}")
    return math.pi / math.sqrt(6.0 * n)


def saddle_q(n: float) -> float:
    return math.exp(-log_inv_q(n))


def sigma(m: int) -> int:
    """Sum of the divisors of ``m``."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d
            e = m // d
            if e != d:
                total += e
        d += 1
    return total


def sigma_table(m_max: int) -> np.ndarray:
    """``out[m] = sigma(m)`` for ``m <= m_max`` (``out[0] = 0``), by sieve."""
    out = np.zeros(m_max + 1, dtype=np.int64)
    for d in range(1, m_max + 1):
        out[d::d] += d
    return out


def _truncation_point(decay: float, scale: float) -> int:
    # smallest M with (1 + log M) e^{-decay M} below SERIES_RTOL * scale;
    # (1 + log m) bounds sigma(m)/m
    m = max(1, int(math.log(1.0 / (SERIES_RTOL * scale)) / decay))
    while (1.0 + math.log(m)) * math.exp(-decay * m) >= SERIES_RTOL * scale:
        m = int(m * 1.1) + 1
    if m > SERIES_MAX_TERMS:
        raise DomainError(f"series needs more than {SERIES_MAX_TERMS} terms")
    return m


def _sigma_over_m_sum(decay: float, scale: float) -> float:
    # sum_m sigma(m)/m e^{-decay m}
    m = _truncation_point(decay, scale)
    sig = sigma_table(m)[1:].astype(np.float64)
    idx = np.arange(1, m + 1, dtype=np.float64)
    return math.fsum(sig / idx * np.exp(-decay * idx))


def saddle_sum(n: float) -> float:
    """``sum_m sigma(m) q^m``; the exact saddle point makes this equal N."""
    lq = log_inv_q(n)
    m = _truncation_point(lq, 1.0) + int(10 / lq)
    k = np.arange(1, m + 1, dtype=np.float64)
    # Lambert form sum_k k q^k / (1 - q^k)
    return math.fsum(k * np.exp(-lq * k) / -np.expm1(-lq * k))


def logF_at_q(n: int) -> tuple[float, float]:
    """``(series, closed)`` values of ``log F(q)``.

    series: ``sum_m sigma(m)/m q^m``, truncated once the envelope of the
    remaining terms drops below 1e-15 of the sum.
    closed: ``pi sqrt(N/6) - log(2 sqrt(6N)) / 2``.
    """
    if n < 10:
        raise DomainError(f"logF_at_q needs N >= 10, got {n}")
    closed = math.pi * math.sqrt(n / 6.0) - 0.5 * math.log(2.0 * math.sqrt(6.0 * n))
    return _sigma_over_m_sum(log_inv_q(n), closed), closed


def lambert_log_sum(x: float) -> float:
    """``sum_n sigma(n)/n e^{-n/x}``, for ``x >= 1``."""
    if x < 1:
        raise DomainError(f"x must be at least 1, got {x}")
    return _sigma_over_m_sum(1.0 / x, math.pi**2 * x / 6.0)


def lambert_log_closed(x: float) -> float:
    """Large-x expansion ``pi^2 x / 6 - log(2 pi x) / 2`` of :func:`lambert_log_sum`."""
    return math.pi**2 * x / 6.0 - 0.5 * math.log(2.0 * math.pi * x)


def hr_log_estimates(n: int) -> tuple[float, float]:
    """Natural logs of the saddle-point and classical estimates of p(N)."""
    series, _ = logF_at_q(n)
    saddle = series + n * log_inv_q(n) - math.log(2.0 * 6.0**0.25) - 0.75 * math.log(n)
    classic = 2.0 * math.pi * math.sqrt(n / 6.0) - math.log(4.0 * n * math.sqrt(3.0))
    return saddle, classic


def hr_estimates(n: int) -> tuple[float, float]:
    """``(F(q) q^-N / (2 6^{1/4} N^{3/4}),  exp(2 pi sqrt(N/6)) / (4 N sqrt 3))``."""
    saddle, classic = hr_log_estimates(n)
    return math.exp(saddle), math.exp(classic)


def log_partition_count(n: int) -> float:
    if n <= P_EXACT_LIMIT:
        return math.log(partition_count(n))
    # leading Rademacher term; the next one is smaller by exp(-pi sqrt(n/6))
    lam = math.sqrt(n - 1 / 24)
    c = math.pi * math.sqrt(2 / 3)
    deriv = (c / lam - 1 / lam**2) / (2 * lam)
    return c * lam - math.log(2.0) + math.log(deriv) - math.log(math.pi * math.sqrt(2.0))


@dataclass(frozen=True)
class Thresholds:
    t0: float
    t1: float
    t2: float

    def clamped(self, floor: float = THRESHOLD_FLOOR) -> "Thresholds":
        return Thresholds(max(self.t0, floor), max(self.t1, floor), max(self.t2, floor))


def thresholds(n: float) -> Thresholds:
    """Raw (possibly negative) T0, T1, T2."""
    if n < 16:
        raise DomainError(f"thresholds need N >= 16, got {n}")
    scale = math.sqrt(6.0 * n) / math.pi
    log_n = math.log(n)
    half = 0.5 * log_n
    t0 = scale * log_n**-4
    t1 = scale * (half - 20.0)
    t2 = scale * (half + math.log(log_n) - math.log(math.log(log_n)) - 20.0)
    return Thresholds(t0, t1, t2)


def clamped_thresholds(n: int) -> Thresholds:
    """Thresholds floored at 2; for N < 16 (iterated logs undefined) all are 2."""
    if n < 16:
        return Thresholds(THRESHOLD_FLOOR, THRESHOLD_FLOOR, THRESHOLD_FLOOR)
    return thresholds(n).clamped()


def leading_proportion(n: float) -> float:
    if n < 3:
        raise DomainError(f"leading_proportion needs N >= 3, got {n}")
    return 2.0 / math.log(n)


def _refined_integrand(log_scale: float):
    def f(y: float) -> float:
        if y <= 0.0:
            return 1.0
        return math.exp(-y * (1.0 + log_scale - math.log(y)))

    return f


def refined_integral(n: float, method: str = "quad") -> float:
    """``int_0^1 exp(-y (1 + log(sqrt(6N) / (pi y)))) dy``.

    ``method='quad'`` uses QUADPACK (scipy); ``method='tanh-sinh'`` uses
    mpmath's double-exponential rule, an independent scheme kept for
    cross-checking.
    """
    if n < 3:
        raise DomainError(f"refined_integral needs N >= 3, got {n}")
    log_scale = math.log(math.sqrt(6.0 * n) / math.pi)
    if method == "quad":
        val, err = integrate.quad(
            _refined_integrand(log_scale), 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=200
        )
        if err > 1e-10:
            raise ArithmeticError(f"quadrature error estimate {err} above 1e-10")
        return float(val)
    if method == "tanh-sinh":
        with mpmath.workdps(30):
            ls = mpmath.mpf(log_scale)
            g = lambda y: mpmath.exp(-y * (1 + ls - mpmath.log(y)))  # noqa: E731
            return float(mpmath.quad(g, [0, 1], method="tanh-sinh"))
    raise ValueError(f"unknown method {method!r}")


def core_count_approx(n: int, t: int) -> float:
    """``p(N) exp(-t q^t)``, the large-t approximation to c_t(N)."""
    q_t = math.exp(-t * log_inv_q(n))
    return math.exp(log_partition_count(n) - t * q_t)


def part_count_approx(n: int, t: int) -> float:
    """``q^t p(N)``, approximating the number of partitions of N with a part t."""
    return math.exp(log_partition_count(n) - t * log_inv_q(n))


def _condition_v_parts(n: float) -> tuple[float, float, bool]:
    # returns (T2, L = T2 log(1/q), clamped?)
    lq = log_inv_q(n)
    if n >= 16:
        t2 = thresholds(n).t2
        if t2 > 0:
            return t2, t2 * lq, False
    return THRESHOLD_FLOOR, THRESHOLD_FLOOR * lq, True


def condition_v_closedform(n: float) -> tuple[float, bool]:
    """``((1 - exp(-T2 q^T2)) / (T2 log(1/q)), clamped)``.

    ``clamped`` is true when the raw T2 is not positive and 2 is used instead.
    """
    t2, big_l, clamped = _condition_v_parts(n)
    a = t2 * math.exp(-big_l)
    return -math.expm1(-a) / big_l, clamped


def condition_v_quadrature(n: float) -> float:
    """``int_0^inf q^{T2+y} exp(-T2 q^{T2+y}) dy`` by adaptive quadrature.

    Integrated in ``u = y log(1/q)``, a pure rescaling, split where the
    inner exponential switches on.  The integrand is multiplied by the
    constant ``a e^L`` (``a = T2 q^T2``, ``L = T2 log(1/q)``) so that it is of
    order one, and divided back out at the end.
    """
    t2, big_l, _ = _condition_v_parts(n)
    a = t2 * math.exp(-big_l)

    def g(u: float) -> float:
        return a * math.exp(-u - a * math.exp(-u))

    knee = max(0.0, math.log(a))
    pieces = [(0.0, knee), (knee, knee + 40.0), (knee + 40.0, math.inf)]
    total = 0.0
    for lo, hi in pieces:
        if hi > lo:
            val, _ = integrate.quad(g, lo, hi, epsabs=1e-14, epsrel=1e-13, limit=200)
            total += val
    # undo the scaling: multiply by e^{-L} / (a log(1/q)) = 1 / L
    return total / big_l


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    q: float
    log_inv_q: float
    logF_series: float
    logF_closed: float
    hr_estimate_saddle: float
    hr_estimate_classic: float
    log_hr_estimate_saddle: float
    log_hr_estimate_classic: float
    p_exact: int | None
    log_p_exact: float
    t0: float
    t1: float
    t2: float
    leading: float
    refined: float
    condition_v: float
    condition_v_clamped: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _safe_exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf


def report(n: int) -> AsymptoticReport:
    if n < 16:
        raise DomainError(f"report needs N >= 16, got {n}")
    series, closed = logF_at_q(n)
    ls, lc = hr_log_estimates(n)
    th = thresholds(n)
    cv, clamped = condition_v_closedform(n)
    return AsymptoticReport(
        n=n,
        q=saddle_q(n),
        log_inv_q=log_inv_q(n),
        logF_series=series,
        logF_closed=closed,
        hr_estimate_saddle=_safe_exp(ls),
        hr_estimate_classic=_safe_exp(lc),
        log_hr_estimate_saddle=ls,
        log_hr_estimate_classic=lc,
        p_exact=partition_count(n) if n <= P_EXACT_LIMIT else None,
        log_p_exact=log_partition_count(n),
        t0=th.t0,
        t1=th.t1,
        t2=th.t2,
        leading=leading_proportion(n),
        refined=refined_integral(n),
        condition_v=cv,
        condition_v_clamped=clamped,
    )
