"""Pure-Python/numpy versions of the hot kernels.

These mirror ``_kernels.pyx`` one-for-one and are used when the compiled
extension is unavailable (or when ``CUTGROUPS_PURE=1``).
"""
from __future__ import annotations

import numpy as np

INT64_SAFE = 1 << 62


def mult_table(perms, base, weights, sorted_keys, key_order):
    """Index table ``T[i, j]`` of ``perms[i] o perms[j]``.

    Elements are identified by the images of the ``base`` points, packed
    into one int64 key with ``weights``.
    """
    n = perms.shape[0]
    table = np.empty((n, n), dtype=np.int32)
    base_imgs = perms[:, base]  # (n, k)
    # rows in chunks to bound memory at n ~ 10^4
    chunk = max(1, 2_000_000 // max(1, n * len(base)))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        comp = perms[start:stop][:, base_imgs]  # (c, n, k)
        keys = comp @ weights
        pos = np.searchsorted(sorted_keys, keys)
        table[start:stop] = key_order[pos]
    return table


def class_labels(table, inv):
    n = table.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    everyone = np.arange(n)
    nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        orbit = table[table[everyone, x], inv]
        labels[orbit] = nxt
        nxt += 1
    return labels


def convolve_int64(table, a_idx, a_coef, b_idx, b_coef):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.int64)
    if len(a_idx) == 0 or len(b_idx) == 0:
        return out
    targets = table[np.ix_(a_idx, b_idx)].ravel()
    np.add.at(out, targets, np.outer(a_coef, b_coef).ravel())
    return out


def echelon(rows):
    """Row echelon form over the integers (unimodular row operations).

    Works on int64 arrays and on object arrays of Python ints alike.
    Returns ``(H, pivots, overflow)``; ``H`` holds only the nonzero rows.
    On int64 input, ``overflow`` is True when an entry left the safe range,
    in which case the result must be discarded.
    """
    m = np.array(rows, copy=True)
    is_int64 = m.dtype == np.int64
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for j in range(ncols):
        if r >= nrows:
            break
        while True:
            live = np.nonzero(m[r:, j])[0] + r
            if len(live) == 0:
                break
            mags = np.abs(m[live, j])
            p = live[int(np.argmin(mags))]
            if p != r:
                m[[r, p]] = m[[p, r]]
            if len(live) == 1:
                break
            piv = m[r, j]
            others = np.nonzero(m[r + 1:, j])[0] + r + 1
            q = m[others, j] // piv
            if is_int64:
                bound = int(np.abs(q).max()) * int(np.abs(m[r]).max())
                if bound >= INT64_SAFE:
                    return m[:r], pivots, True
            m[others] -= q[:, None] * m[r][None, :]
            if is_int64 and int(np.abs(m[others]).max(initial=0)) >= INT64_SAFE:
                return m[:r], pivots, True
        if m[r, j] != 0:
            if m[r, j] < 0:
                m[r] = -m[r]
            pivots.append(j)
            r += 1
    return m[:r], pivots, False
