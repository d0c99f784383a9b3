"""Exhaustive identity checks between generating functions and enumeration.

``han``    Han's bivariate product against the brute-force histogram of
           ``H_t`` over all partitions of N.
``cores``  ``tcore_series`` against counting t-cores one partition at a time.
``props``  ``#{mu : P_t(mu) = l} = p(l) * a_t(N - t*l)``, where ``a_t``
           counts partitions with no part divisible by t.

Each suite stops at the first mismatch and reports its ``(N, t, l)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .hooks import SizeGuardError, core_count_exact, parts_div_sum
from .partitions import enumerate_partitions, partition_counts
from .series import han_table, nondiv_series, tcore_series

__all__ = ["SUITES", "VERIFY_LIMIT", "VerifyReport", "run_suite"]

VERIFY_LIMIT = 40
SUITES = ("han", "cores", "props")


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    nmax: int
    tmax: int
    passed: bool
    checked: int
    failure: dict | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def _fail(n, t, ell, expected, got) -> dict:
    return {"n": n, "t": t, "l": ell, "expected": str(expected), "got": str(got)}


def _han(nmax: int, tmax: int):
    checked = 0
    tables = {t: han_table(t, nmax) for t in range(1, tmax + 1)}
    for n in range(nmax + 1):
        hists = [kernels.hook_hist(np.asarray(lam, dtype=np.int64)) for lam in enumerate_partitions(n)]
        for t in range(1, tmax + 1):
            brute = Counter(int(h[t::t].sum()) for h in hists)
            row = tables[t][n]
            for ell in range(max(len(row), max(brute) + 1)):
                want = brute.get(ell, 0)
                got = row[ell] if ell < len(row) else 0
                checked += 1
                if want != got:
                    return checked, _fail(n, t, ell, want, got)
    return checked, None


def _cores(nmax: int, tmax: int):
    checked = 0
    for t in range(1, tmax + 1):
        series = tcore_series(t, nmax)
        for n in range(nmax + 1):
            want = core_count_exact(n, t, limit=nmax)
            checked += 1
            if series[n] != want:
                return checked, _fail(n, t, None, want, series[n])
    return checked, None


def _nondiv(t: int, degree: int) -> tuple[int, ...]:
    if t == 1:
        # every part is a multiple of 1
        return (1,) + (0,) * degree
    return nondiv_series(t, degree).coeffs


def _props(nmax: int, tmax: int):
    checked = 0
    p = partition_counts(nmax)
    a = {t: _nondiv(t, nmax) for t in range(1, tmax + 1)}
    for n in range(1, nmax + 1):
        mus = enumerate_partitions(n)
        for t in range(1, min(n, tmax) + 1):
            brute = Counter(parts_div_sum(mu, t) for mu in mus)
            for ell in range(n // t + 1):
                want = brute.get(ell, 0)
                got = p[ell] * a[t][n - t * ell]
                checked += 1
                if want != got:
                    return checked, _fail(n, t, ell, want, got)
    return checked, None


_RUNNERS = {"han": _han, "cores": _cores, "props": _props}


def run_suite(suite: str, nmax: int = 24, tmax: int | None = None) -> VerifyReport:
    """Run one identity suite over ``N <= nmax`` and ``t <= tmax`` (default ``nmax``)."""
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if nmax < 0:
        raise ValueError(f"nmax must be nonnegative, got {nmax}")
    if nmax > VERIFY_LIMIT:
        raise SizeGuardError(f"verify: nmax={nmax} exceeds bound {VERIFY_LIMIT}")
    tmax = nmax if tmax is None else tmax
    if tmax < 1:
        raise ValueError(f"tmax must be positive, got {tmax}")
    checked, failure = _RUNNERS[suite](nmax, tmax)
    return VerifyReport(suite, nmax, tmax, failure is None, checked, failure)
