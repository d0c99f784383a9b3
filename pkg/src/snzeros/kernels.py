"""Hot numeric kernels: hook histograms, core tests and zero-flag scans.

Each kernel comes as a pair ``<name>_jit`` (numba, explicit loops) and
``<name>_np`` (vectorized numpy).  The unsuffixed name is whichever of the
two the ``SNZEROS_DISABLE_NUMBA`` flag selects.  Partitions enter as 1-d
``int64`` arrays of weakly decreasing parts.

Flag vectors returned by the classifiers are ``int64[5]``:
``(type_i, type_ii, type_iii, poly, witness_t)`` with ``witness_t = 0``
when no Stanley witness exists.
"""

from __future__ import annotations

import numpy as np

from ._jit import njit, pick

# --------------------------------------------------------------------------
# hook histograms


def _hook_hist_loop(lam):
    n = 0
    for p in lam:
        n += p
    hist = np.zeros(n + 1, dtype=np.int64)
    ell = lam.shape[0]
    if ell == 0:
        return hist
    conj = np.zeros(lam[0], dtype=np.int64)
    for i in range(ell):
        for j in range(lam[i]):
            conj[j] += 1
    for i in range(ell):
        li = lam[i]
        for j in range(li):
            hist[li - j + conj[j] - i - 1] += 1
    return hist


hook_hist_jit = njit(_hook_hist_loop)


def hook_hist_np(lam):
    lam = np.asarray(lam, dtype=np.int64)
    n = int(lam.sum())
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    ell = lam.shape[0]
    # conj[j] = #{i : lam_i > j}; -lam is nondecreasing.
    conj = np.searchsorted(-lam, -np.arange(lam[0]), side="left")
    rows = np.repeat(np.arange(ell), lam)
    starts = np.repeat(np.cumsum(lam) - lam, lam)
    cols = np.arange(n) - starts
    h = lam[rows] - cols + conj[cols] - rows - 1
    return np.bincount(h, minlength=n + 1).astype(np.int64)


hook_hist = pick(hook_hist_jit, hook_hist_np)


def _stride_sum_loop(hist, t):
    s = 0
    for h in range(t, hist.shape[0], t):
        s += hist[h]
    return s


stride_sum_jit = njit(_stride_sum_loop)


def stride_sum_np(hist, t):
    return int(hist[t::t].sum())


stride_sum = pick(stride_sum_jit, stride_sum_np)

# --------------------------------------------------------------------------
# beta sets


def _beta_hooks_div_loop(betas, t):
    # Hooks of lam <-> pairs (b, c): b a bead, 0 <= c < b an empty position.
    ell = betas.shape[0]
    if ell == 0:
        return 0
    occ = np.zeros(betas[ell - 1] + 1, dtype=np.bool_)
    for b in betas:
        occ[b] = True
    count = 0
    for b in betas:
        c = b - t
        while c >= 0:
            if not occ[c]:
                count += 1
            c -= t
    return count


beta_hooks_div_jit = njit(_beta_hooks_div_loop)


def beta_hooks_div_np(betas, t):
    betas = np.asarray(betas, dtype=np.int64)
    if betas.size == 0:
        return 0
    occ = np.zeros(int(betas[-1]) + 1, dtype=bool)
    occ[betas] = True
    count = 0
    for b in betas:
        below = occ[b - t :: -t] if b >= t else occ[:0]
        count += int(below.size - below.sum())
    return count


beta_hooks_div = pick(beta_hooks_div_jit, beta_hooks_div_np)


def _is_core_loop(betas, t):
    ell = betas.shape[0]
    if ell == 0:
        return True
    occ = np.zeros(betas[ell - 1] + 1, dtype=np.bool_)
    for b in betas:
        occ[b] = True
    for b in betas:
        if b >= t and not occ[b - t]:
            return False
    return True


is_core_beta_jit = njit(_is_core_loop)


def is_core_beta_np(betas, t):
    betas = np.asarray(betas, dtype=np.int64)
    if betas.size == 0:
        return True
    occ = np.zeros(int(betas[-1]) + 1, dtype=bool)
    occ[betas] = True
    movable = betas[betas >= t]
    return bool(occ[movable - t].all())


is_core_beta = pick(is_core_beta_jit, is_core_beta_np)

# --------------------------------------------------------------------------
# single-pair classification


@njit
def _core_from_occ(occ, betas, t):
    for b in betas:
        if b >= t and not occ[b - t]:
            return False
    return True


def _classify_loop(lam, mu):
    out = np.zeros(5, dtype=np.int64)
    n = 0
    for p in lam:
        n += p
    if n == 0 or mu.shape[0] == 0:
        return out
    hist = hook_hist_jit(lam)
    ell = lam.shape[0]
    betas = np.empty(ell, dtype=np.int64)
    for i in range(ell):
        betas[i] = lam[ell - 1 - i] + i
    occ = np.zeros(betas[ell - 1] + 1, dtype=np.bool_)
    for b in betas:
        occ[b] = True

    if _core_from_occ(occ, betas, mu[0]):
        out[0] = 1
    ptot = np.zeros(n + 1, dtype=np.int64)
    pcnt = np.zeros(n + 1, dtype=np.int64)
    i = 0
    m_len = mu.shape[0]
    while i < m_len:
        k = mu[i]
        j = i
        while j < m_len and mu[j] == k:
            j += 1
        mult = j - i
        i = j
        if out[1] == 0 and _core_from_occ(occ, betas, k):
            out[1] = 1
        d = 1
        while d * d <= k:
            if k % d == 0:
                e = k // d
                ptot[d] += mult * e
                pcnt[d] += mult
                if e != d:
                    ptot[e] += mult * d
                    pcnt[e] += mult
            d += 1
    for t in range(2, n + 1):
        if pcnt[t] == 0:
            continue
        h = 0
        for s in range(t, n + 1, t):
            h += hist[s]
        if out[2] == 0 and ptot[t] > h:
            out[2] = 1
            out[4] = t
        if pcnt[t] > h:
            out[3] = 1
        if out[2] == 1 and out[3] == 1:
            break
    return out


classify_jit = njit(_classify_loop)


def _divisor_tables(mu, n):
    ptot = np.zeros(n + 1, dtype=np.int64)
    pcnt = np.zeros(n + 1, dtype=np.int64)
    parts, mults = np.unique(mu, return_counts=True)
    for k, mult in zip(parts.tolist(), mults.tolist()):
        d = np.arange(1, int(np.sqrt(k)) + 1)
        d = d[k % d == 0]
        divs = np.unique(np.concatenate([d, k // d]))
        ptot[divs] += mult * (k // divs)
        pcnt[divs] += mult
    return ptot, pcnt, parts


def classify_np(lam, mu):
    lam = np.asarray(lam, dtype=np.int64)
    mu = np.asarray(mu, dtype=np.int64)
    out = np.zeros(5, dtype=np.int64)
    n = int(lam.sum())
    if n == 0 or mu.size == 0:
        return out
    hist = hook_hist_np(lam)
    ell = lam.shape[0]
    betas = lam[::-1] + np.arange(ell)
    out[0] = is_core_beta_np(betas, int(mu[0]))
    ptot, pcnt, parts = _divisor_tables(mu, n)
    out[1] = any(is_core_beta_np(betas, int(k)) for k in parts[::-1])
    cand = np.nonzero(pcnt[2:])[0] + 2
    for t in cand.tolist():
        h = int(hist[t::t].sum())
        if not out[2] and ptot[t] > h:
            out[2] = 1
            out[4] = t
        if pcnt[t] > h:
            out[3] = 1
        if out[2] and out[3]:
            break
    return out


classify = pick(classify_jit, classify_np)

# --------------------------------------------------------------------------
# all-pairs flag scan for exact censuses
#
# Inputs are per-partition tables over t = 0..n:
#   hdiv[a, t]  = H_t(lambda_a)           (int64, p x (n+1))
#   ptot[b, t]  = P_t(mu_b)               (int64, p x (n+1))
#   pcnt[b, t]  = #{parts of mu_b divisible by t}
#   mu1[b]      = largest part of mu_b
#   partmask[b, t] = t is a part of mu_b  (bool)
# Output is an int16 array (p_lam, p_mu, 5) of flag vectors; int16 keeps the
# N = 28 census (3718^2 pairs) near 140 MB.


def _pair_flags_loop(hdiv, ptot, pcnt, mu1, partmask):
    n_lam = hdiv.shape[0]
    n_mu = ptot.shape[0]
    width = hdiv.shape[1]
    out = np.zeros((n_lam, n_mu, 5), dtype=np.int16)
    for a in range(n_lam):
        for b in range(n_mu):
            if hdiv[a, mu1[b]] == 0:
                out[a, b, 0] = 1
            for t in range(1, width):
                if partmask[b, t] and hdiv[a, t] == 0:
                    out[a, b, 1] = 1
                    break
            for t in range(2, width):
                h = hdiv[a, t]
                if out[a, b, 2] == 0 and ptot[b, t] > h:
                    out[a, b, 2] = 1
                    out[a, b, 4] = t
                if pcnt[b, t] > h:
                    out[a, b, 3] = 1
                if out[a, b, 2] == 1 and out[a, b, 3] == 1:
                    break
    return out


pair_flags_jit = njit(_pair_flags_loop)


def pair_flags_np(hdiv, ptot, pcnt, mu1, partmask):
    n_lam = hdiv.shape[0]
    n_mu = ptot.shape[0]
    out = np.zeros((n_lam, n_mu, 5), dtype=np.int16)
    core = hdiv == 0
    out[:, :, 0] = core[:, mu1]
    out[:, :, 1] = (core.astype(np.int64) @ partmask.T.astype(np.int64)) > 0
    if hdiv.shape[1] <= 2:
        # N = 1: no t >= 2 to scan
        return out
    h = hdiv[:, None, 2:]
    beats = ptot[None, :, 2:] > h
    out[:, :, 2] = beats.any(axis=2)
    first = beats.argmax(axis=2) + 2
    out[:, :, 4] = np.where(out[:, :, 2] == 1, first, 0)
    out[:, :, 3] = (pcnt[None, :, 2:] > h).any(axis=2)
    return out


pair_flags = pick(pair_flags_jit, pair_flags_np)
