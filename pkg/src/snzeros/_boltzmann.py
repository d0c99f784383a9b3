"""Loop-level source of the Boltzmann sampler.

These functions run as plain Python and are also compiled by
:func:`snzeros._jit.compile_namespace`, which rebinds ``u64`` and
``classify_pair`` to their jitted counterparts.  Keep them to the subset
of Python that numba's nopython mode accepts.

Random numbers come from SplitMix64 run in counter mode: a stream is a
64-bit key, and draw ``c`` is ``mix(key + c * GAMMA)``.
"""

import math

import numpy as np

from .kernels import classify_np

MASK = 0xFFFFFFFFFFFFFFFF
GAMMA = 0x9E3779B97F4A7C15
INV_2_53 = 1.0 / 9007199254740992.0

classify_pair = classify_np


def u64(x):
    return int(x) & MASK


def mix(x):
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


def to_u64(x):
    return np.uint64(x)


def stream_key(master, stream, sub):
    # every operand is u64 so numba never promotes to float
    one = u64(1)
    h = mix((master ^ u64(0x243F6A8885A308D3)) & MASK)
    h = mix((h + ((stream + one) * GAMMA & MASK)) & MASK)
    return mix((h ^ ((sub + one) * 0xD1B54A32D192ED03 & MASK)) & MASK)


def uniform(s):
    # open interval (0, 1)
    s = (s + GAMMA) & MASK
    return ((mix(s) >> 11) + 0.5) * INV_2_53, s


def trial(n, log_q, k0, deferred, s, parts, mults):
    """One Boltzmann draw. Returns ``(m, s)``; ``m < 0`` means rejected.

    On success ``parts[:m]`` (increasing) and ``mults[:m]`` hold the
    distinct parts and their multiplicities.  With ``deferred`` the
    multiplicity of 1 is not drawn: the remainder ``r = n - S`` is accepted
    with probability ``q^r``, which is ``P(Z_1 = r) / P(Z_1 = 0)``.
    """
    total = 0
    m = 0
    head = k0 if k0 < n else n
    start = 2 if deferred else 1
    for k in range(start, head + 1):
        u, s = uniform(s)
        z = int(math.floor(math.log(u) / (k * log_q)))
        if z > 0:
            total += k * z
            if total > n:
                return -1, s
            parts[m] = k
            mults[m] = z
            m += 1
    # tail: Bernoulli(q^(k+1)) candidates by geometric skips, thinned to q^j
    k = head
    while k < n:
        p = math.exp((k + 1) * log_q)
        lp = math.log1p(-p)
        if lp == 0.0:
            break
        u, s = uniform(s)
        gap = math.log(u) / lp
        if gap >= n - k:
            break
        j = k + 1 + int(math.floor(gap))
        u, s = uniform(s)
        if u < math.exp((j - k - 1) * log_q):
            u, s = uniform(s)
            z = 1 + int(math.floor(math.log(u) / (j * log_q)))
            total += j * z
            if total > n:
                return -1, s
            parts[m] = j
            mults[m] = z
            m += 1
        k = j
    r = n - total
    if deferred:
        if r > 0:
            u, s = uniform(s)
            if u >= math.exp(r * log_q):
                return -1, s
            # part 1 goes first to keep parts increasing
            for i in range(m, 0, -1):
                parts[i] = parts[i - 1]
                mults[i] = mults[i - 1]
            parts[0] = 1
            mults[0] = r
            m += 1
        return m, s
    if r != 0:
        return -1, s
    return m, s


def draw(n, log_q, k0, deferred, s, parts, mults):
    """Repeat trials until one is accepted. Returns ``(m, trials, s)``."""
    trials = 0
    while True:
        trials += 1
        m, s = trial(n, log_q, k0, deferred, s, parts, mults)
        if m >= 0:
            return m, trials, s


def expand(parts, mults, m):
    length = 0
    for i in range(m):
        length += mults[i]
    out = np.empty(length, dtype=np.int64)
    pos = 0
    for i in range(m - 1, -1, -1):
        for _ in range(mults[i]):
            out[pos] = parts[i]
            pos += 1
    return out


def sample_one(n, log_q, k0, deferred, key, parts, mults):
    m, trials, _ = draw(n, log_q, k0, deferred, key, parts, mults)
    return expand(parts, mults, m), trials


def count_trials(n, log_q, k0, deferred, key, n_trials, parts, mults):
    """Run exactly ``n_trials`` trials on one stream; return the number accepted."""
    s = key
    accepted = 0
    for _ in range(n_trials):
        m, s = trial(n, log_q, k0, deferred, s, parts, mults)
        if m >= 0:
            accepted += 1
    return accepted


def estimate_block(n, log_q, k0, deferred, master, stream, first, count, parts, mults):
    """Classify pairs ``first .. first+count-1``; pair ``i`` owns substreams 2i, 2i+1.

    Returns ``(counts, trials)`` with ``counts = [I, II, III, poly]``.
    """
    counts = np.zeros(4, dtype=np.int64)
    trials = 0
    for i in range(first, first + count):
        key = stream_key(master, stream, u64(2 * i))
        lam, t1 = sample_one(n, log_q, k0, deferred, key, parts, mults)
        key = stream_key(master, stream, u64(2 * i + 1))
        mu, t2 = sample_one(n, log_q, k0, deferred, key, parts, mults)
        trials += t1 + t2
        f = classify_pair(lam, mu)
        counts[0] += f[0]
        counts[1] += f[1]
        counts[2] += f[2]
        counts[3] += f[3]
    return counts, trials


NAMES = (
    "to_u64",
    "mix",
    "stream_key",
    "uniform",
    "trial",
    "draw",
    "expand",
    "sample_one",
    "count_trials",
    "estimate_block",
)
