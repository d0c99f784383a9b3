"""Uniform random partitions by Boltzmann rejection, and Monte Carlo zero rates.

Part multiplicities ``Z_k`` (``1 <= k <= N``) are drawn independently with
``P(Z_k = j) = (1 - q^k) q^(kj)`` at ``q = exp(-pi / sqrt(6N))`` and the draw
is kept iff ``sum k Z_k = N``; conditioned on that event every partition of
N is equally likely.  Small parts get direct geometric draws.  Large parts
are located by geometric skips over a dominating Bernoulli sequence, then
thinned.  A trial aborts as soon as its running sum passes N.

Two acceptance schemes are offered:

``"rejection"``
    the plain scheme above,
``"deferred"``
    ``Z_1`` is never drawn; the remainder ``r = N - sum_{k>=2} k Z_k`` is
    kept with probability ``q^r``.  The output law is the same, and at
    N = 50000 it needs about 170 times fewer trials.

Randomness is counter-based (SplitMix64).  ``SeedSpec(master, stream)``
names a stream; pair ``i`` of an estimate draws lambda from substream
``2i`` and mu from ``2i + 1``, so results do not depend on how the pairs
are split across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import _boltzmann as _src
from . import kernels
from ._jit import USE_NUMBA, compile_namespace
from .characters import default_workers
from .partitions import Partition, partition_count

__all__ = [
    "METHODS",
    "SampleEstimate",
    "SeedSpec",
    "TypeEstimates",
    "acceptance_rate",
    "estimate_zero_types",
    "exact_acceptance_rate",
    "predicted_acceptance_rate",
    "sample_partition",
    "sample_partitions",
    "saddle_log_q",
]

METHODS = ("rejection", "deferred")
FLAG_NAMES = ("type_i", "type_ii", "type_iii", "poly")

_JIT = compile_namespace(
    _src, _src.NAMES, overrides={"classify_pair": kernels.classify_jit}
)
if _JIT is not None:
    _JIT["u64"] = _JIT["to_u64"]


def _backend(jit: bool | None):
    """Namespace of kernels: jitted (default when enabled) or the Python source."""
    if jit is None:
        jit = USE_NUMBA
    if jit and _JIT is not None:
        return _JIT, True
    return vars(_src), False


@dataclass(frozen=True)
class SeedSpec:
    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        if not -(1 << 63) <= self.master_seed < (1 << 64):
            raise ValueError(f"master_seed must fit in 64 bits, got {self.master_seed}")
        if not 0 <= self.stream_index < (1 << 64):
            raise ValueError(f"stream_index must be a nonnegative 64-bit integer, got {self.stream_index}")

    @property
    def master_u64(self) -> int:
        return self.master_seed & _src.MASK


@dataclass(frozen=True)
class SampleEstimate:
    proportion: float
    stderr: float
    n_samples: int
    n_trials: int
    hits: int

    @classmethod
    def from_counts(cls, hits: int, n_samples: int, n_trials: int) -> "SampleEstimate":
        p = hits / n_samples
        return cls(p, math.sqrt(p * (1.0 - p) / n_samples), n_samples, n_trials, hits)


@dataclass(frozen=True)
class TypeEstimates:
    n: int
    seed: SeedSpec
    method: str
    type_i: SampleEstimate
    type_ii: SampleEstimate
    type_iii: SampleEstimate
    poly: SampleEstimate

    def as_dict(self) -> dict:
        return asdict(self)


def saddle_log_q(n: int) -> float:
    return -math.pi / math.sqrt(6.0 * n)


def _params(n: int) -> tuple[float, int]:
    log_q = saddle_log_q(n)
    # head ends where q^k has dropped to about 1/e
    k0 = max(1, min(n, int(math.ceil(-1.0 / log_q))))
    return log_q, k0


def _buffers(n: int):
    # distinct parts k_1 < .. < k_m with sum <= n force m <= sqrt(2n); one spare
    size = int(math.isqrt(2 * n)) + 3
    return np.zeros(size, dtype=np.int64), np.zeros(size, dtype=np.int64)


def _check_method(method: str) -> bool:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return method == "deferred"


def _key(ns, jit, seed: SeedSpec, sub: int):
    # numba boxes u64 results as Python ints; re-wrap so they type as u64
    conv = np.uint64 if jit else int
    return conv(ns["stream_key"](conv(seed.master_u64), conv(seed.stream_index), conv(sub)))


def sample_partitions(
    n: int, count: int, seed: SeedSpec, method: str = "rejection", jit: bool | None = None
) -> tuple[list[Partition], int]:
    """``count`` independent uniform partitions of ``n`` and the trials used.

    Sample ``j`` is drawn from substream ``j`` of ``seed``.
    """
    if n < 1:
        raise ValueError(f"sampling needs N >= 1, got {n}")
    deferred = _check_method(method)
    ns, jit = _backend(jit)
    log_q, k0 = _params(n)
    parts, mults = _buffers(n)
    out = []
    trials = 0
    for j in range(count):
        lam, t = ns["sample_one"](n, log_q, k0, deferred, _key(ns, jit, seed, j), parts, mults)
        out.append(tuple(int(x) for x in lam))
        trials += int(t)
    return out, trials


def sample_partition(
    n: int, seed: SeedSpec, method: str = "rejection", jit: bool | None = None
) -> Partition:
    """One uniform random partition of ``n``, determined by ``seed``."""
    return sample_partitions(n, 1, seed, method, jit)[0][0]


def acceptance_rate(
    n: int, n_trials: int, seed: SeedSpec, method: str = "rejection", jit: bool | None = None
) -> float:
    """Fraction of accepted trials over ``n_trials`` consecutive trials of one stream."""
    if n < 1 or n_trials < 1:
        raise ValueError("acceptance_rate needs N >= 1 and n_trials >= 1")
    deferred = _check_method(method)
    ns, jit = _backend(jit)
    log_q, k0 = _params(n)
    parts, mults = _buffers(n)
    acc = ns["count_trials"](n, log_q, k0, deferred, _key(ns, jit, seed, 0), n_trials, parts, mults)
    return int(acc) / n_trials


def exact_acceptance_rate(n: int, method: str = "rejection") -> float:
    """``p(N) q^N prod_{k<=N} (1 - q^k)``, or its deferred counterpart."""
    deferred = _check_method(method)
    log_q, _ = _params(n)
    log_p = math.log(partition_count(n))
    lo = 2 if deferred else 1
    log_norm = sum(math.log1p(-math.exp(k * log_q)) for k in range(lo, n + 1))
    # deferred: each partition is kept with weight q^(N - m_1) q^(m_1) = q^N
    return math.exp(log_p + n * log_q + log_norm)


def predicted_acceptance_rate(n: int) -> float:
    """Leading-order rate ``1 / (2 * 6^(1/4) * N^(3/4))``."""
    return 1.0 / (2.0 * 6.0**0.25 * n**0.75)


def _estimate_job(args):
    n, deferred, master, stream, first, count, jit = args
    ns, jit = _backend(jit)
    log_q, k0 = _params(n)
    parts, mults = _buffers(n)
    conv = np.uint64 if jit else int
    counts, trials = ns["estimate_block"](
        n, log_q, k0, deferred, conv(master), conv(stream), first, count, parts, mults
    )
    return [int(c) for c in counts], int(trials)


def estimate_zero_types(
    n: int,
    n_samples: int,
    seed: SeedSpec,
    method: str = "rejection",
    workers: int | None = None,
    block: int = 1000,
    jit: bool | None = None,
    progress=None,
) -> TypeEstimates:
    """Proportions of type I, II, III and poly-flag pairs among random pairs.

    Pairs are cut into blocks of ``block`` consecutive indices and farmed
    out to ``workers`` processes; integer counts are summed at the end.
    ``progress``, if given, is called with the number of pairs done.
    """
    if n < 2:
        raise ValueError(f"estimate_zero_types needs N >= 2, got {n}")
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    deferred = _check_method(method)
    workers = default_workers() if workers is None else max(1, workers)
    jobs = [
        (n, deferred, seed.master_u64, seed.stream_index, s, min(block, n_samples - s), jit)
        for s in range(0, n_samples, block)
    ]
    totals = [0, 0, 0, 0]
    trials = 0
    done = 0

    def absorb(result, size):
        nonlocal trials, done
        counts, t = result
        for i in range(4):
            totals[i] += counts[i]
        trials += t
        done += size
        if progress is not None:
            progress(done)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for job, res in zip(jobs, pool.map(_estimate_job, jobs)):
                absorb(res, job[5])
    else:
        for job in jobs:
            absorb(_estimate_job(job), job[5])
    est = [SampleEstimate.from_counts(h, n_samples, trials) for h in totals]
    return TypeEstimates(n, seed, method, *est)
