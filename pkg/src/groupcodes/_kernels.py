"""Compiled inner loops for codeword enumeration.

Generator rows arrive as ``uint64`` arrays of shape ``(k, words)``; bit ``j``
of the row is word ``j // 64``, bit ``j % 64``.
"""

from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is often too old and numba warns about it on every run
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(inline="always", cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def enum_prefix(gen, w, prefix, plen, stop_at, combo_out):
    """Scan all weight-``w`` row combinations that start with ``prefix[:plen]``.

    Lexicographic order with a stack of prefix sums, so each step costs
    one row XOR at the deepest level (amortised).  Stops early once a word of
    weight ``<= stop_at`` is seen.  Returns ``(best_weight, visited)`` and
    writes the minimising combination into ``combo_out``.
    """
    k, nw = gen.shape
    best = np.int64(1) << 40
    count = np.int64(0)
    if prefix[plen - 1] + (w - plen) > k - 1:
        return best, count
    idx = np.empty(w, np.int64)
    part = np.zeros((w + 1, nw), np.uint64)
    for d in range(w):
        idx[d] = prefix[d] if d < plen else idx[d - 1] + 1
        for t in range(nw):
            part[d + 1, t] = part[d, t] ^ gen[idx[d], t]
    while True:
        wt = np.int64(0)
        for t in range(nw):
            wt += _popcount(part[w, t])
        count += 1
        if wt < best:
            best = wt
            for d in range(w):
                combo_out[d] = idx[d]
            if wt <= stop_at:
                return best, count
        d = w - 1
        while d >= plen and idx[d] == k - w + d:
            d -= 1
        if d < plen:
            break
        idx[d] += 1
        for t in range(nw):
            part[d + 1, t] = part[d, t] ^ gen[idx[d], t]
        for e in range(d + 1, w):
            idx[e] = idx[e - 1] + 1
            for t in range(nw):
                part[e + 1, t] = part[e, t] ^ gen[idx[e], t]
    return best, count


@njit(parallel=True, cache=True)
def enum_tasks(gen, w, prefixes, plens, stop_at):
    """Run :func:`enum_prefix` for each task row of ``prefixes``.

    Per-task results are kept separately so the caller's reduction does not
    depend on thread scheduling.
    """
    ntask = prefixes.shape[0]
    bests = np.empty(ntask, np.int64)
    counts = np.empty(ntask, np.int64)
    combos = np.zeros((ntask, w), np.int64)
    for s in prange(ntask):
        b, c = enum_prefix(gen, w, prefixes[s], plens[s], stop_at, combos[s])
        bests[s] = b
        counts[s] = c
    return bests, counts, combos


@njit(cache=True)
def gray_all(gen):
    """Visit all ``2^k - 1`` nonzero combinations in Gray-code order.

    Returns ``(best_weight, best_gray_index)``; the combination is the bit
    pattern ``i ^ (i >> 1)`` of the returned index.
    """
    k, nw = gen.shape
    cur = np.zeros(nw, np.uint64)
    best = np.int64(1) << 40
    best_i = np.int64(0)
    total = np.int64(1) << k
    for i in range(1, total):
        # flipped row is the index of the lowest set bit of i
        j = 0
        x = i
        while (x & 1) == 0:
            x >>= 1
            j += 1
        wt = np.int64(0)
        for t in range(nw):
            cur[t] ^= gen[j, t]
            wt += _popcount(cur[t])
        if wt < best:
            best = wt
            best_i = i
    return best, best_i


def pack_rows(rows, n: int) -> np.ndarray:
    """Pack Python-int rows into a ``(k, ceil(n/64))`` uint64 array."""
    nw = max(1, (n + 63) // 64)
    out = np.zeros((len(rows), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for t in range(nw):
            out[i, t] = (r >> (64 * t)) & mask
    return out
