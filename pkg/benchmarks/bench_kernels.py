"""Numba vs pure-numpy timings for the hot kernels.

    python benchmarks/bench_kernels.py [--repeat R] [--quick]

Both implementations are called directly, so the SNZEROS_DISABLE_NUMBA
flag does not matter here.  Compilation happens in a warm-up call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from snzeros import kernels
from snzeros.sampler import SeedSpec, estimate_zero_types, sample_partitions
from snzeros.zeros import pair_tables


def timed(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def row(name, t_jit, t_np):
    print(f"{name:<34} {t_jit * 1e3:>11.3f} {t_np * 1e3:>11.3f} {t_np / t_jit:>9.1f}x")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="smaller sizes")
    args = ap.parse_args(argv)
    big = 5000 if args.quick else 50000
    census_n = 14 if args.quick else 18

    (lam, mu), _ = sample_partitions(big, 2, SeedSpec(1), method="deferred")
    lam = np.asarray(lam, dtype=np.int64)
    mu = np.asarray(mu, dtype=np.int64)
    tables = pair_tables(census_n)[1:]

    print(f"{'kernel':<34} {'numba ms':>11} {'numpy ms':>11} {'speedup':>10}")
    row(f"hook_hist  (N={big})",
        timed(lambda: kernels.hook_hist_jit(lam), args.repeat),
        timed(lambda: kernels.hook_hist_np(lam), args.repeat))
    row(f"classify   (N={big})",
        timed(lambda: kernels.classify_jit(lam, mu), args.repeat),
        timed(lambda: kernels.classify_np(lam, mu), args.repeat))
    row(f"pair_flags (all pairs, N={census_n})",
        timed(lambda: kernels.pair_flags_jit(*tables), max(1, args.repeat // 2)),
        timed(lambda: kernels.pair_flags_np(*tables), max(1, args.repeat // 2)))
    mc_n, pairs = (200, 50) if args.quick else (2000, 100)
    row(f"sampler+classify ({pairs} pairs, N={mc_n})",
        timed(lambda: estimate_zero_types(mc_n, pairs, SeedSpec(2), "deferred", workers=1, jit=True), 1),
        timed(lambda: estimate_zero_types(mc_n, pairs, SeedSpec(2), "deferred", workers=1, jit=False), 1))


if __name__ == "__main__":
    main()
