"""Kernel selection: compiled extension when importable, else the numpy fallback.

Set ``CUTGROUPS_PURE=1`` in the environment to force the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("CUTGROUPS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

INT64_SAFE = _pykernels.INT64_SAFE


def mult_table(perms, base, weights, sorted_keys, key_order):
    return _impl.mult_table(perms, base, weights, sorted_keys, key_order)


def class_labels(table, inv):
    return _impl.class_labels(table, inv)


def convolve(table, a, b):
    """Product of two sparse coefficient maps under ``table``.

    Falls back to Python integers when the int64 kernel could overflow.
    """
    if not a or not b:
        return {}
    amax = max(abs(c) for c in a.values())
    bmax = max(abs(c) for c in b.values())
    if amax * bmax * min(len(a), len(b)) < INT64_SAFE:
        ai = np.fromiter(a.keys(), dtype=np.int64, count=len(a))
        ac = np.fromiter(a.values(), dtype=np.int64, count=len(a))
        bi = np.fromiter(b.keys(), dtype=np.int64, count=len(b))
        bc = np.fromiter(b.values(), dtype=np.int64, count=len(b))
        dense = _impl.convolve_int64(table, ai, ac, bi, bc)
        nz = np.nonzero(dense)[0]
        return {int(i): int(dense[i]) for i in nz}
    out: dict[int, int] = {}
    for g, x in a.items():
        row = table[g]
        for h, y in b.items():
            k = int(row[h])
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def echelon(rows):
    """Integer echelon form of ``rows`` (list of int lists or ndarray).

    Returns ``(H, pivots)`` with ``H`` a list of Python-int rows.
    """
    arr = np.asarray(rows, dtype=object)
    if arr.size == 0:
        return [], []
    big = max(abs(int(v)) for v in arr.ravel())
    if big < (1 << 31):
        H, pivots, overflow = _impl.echelon(arr.astype(np.int64))
        if not overflow:
            return [[int(v) for v in row] for row in H], list(pivots)
    H, pivots, _ = _pykernels.echelon(arr)
    return [[int(v) for v in row] for row in H], list(pivots)
