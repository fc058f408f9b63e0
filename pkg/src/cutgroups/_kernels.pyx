# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same signatures and results as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport llabs

cnp.import_array()

cdef extern from *:
    """
    static inline int _mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int _sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int _add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int _mul_ovf(long long a, long long b, long long *r) nogil
    int _sub_ovf(long long a, long long b, long long *r) nogil
    int _add_ovf(long long a, long long b, long long *r) nogil


cdef inline Py_ssize_t _bsearch(const long long[::1] keys, long long k) nogil:
    cdef Py_ssize_t lo = 0, hi = keys.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if keys[mid] < k:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t _slot(long long key, int shift) nogil:
    return <Py_ssize_t>((<unsigned long long>key * 0x9E3779B97F4A7C15ULL) >> shift)


def mult_table(perms, base, weights, sorted_keys, key_order):
    cdef const long long[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int64)
    cdef const long long[::1] B = np.ascontiguousarray(base, dtype=np.int64)
    cdef const long long[::1] W = np.ascontiguousarray(weights, dtype=np.int64)
    cdef const long long[::1] K = np.ascontiguousarray(sorted_keys, dtype=np.int64)
    cdef const long long[::1] O = np.ascontiguousarray(key_order, dtype=np.int64)
    cdef Py_ssize_t n = P.shape[0], k = B.shape[0]
    out = np.empty((n, n), dtype=np.int32)
    cdef int[:, ::1] T = out
    # open addressing table, load factor <= 1/2; keys are distinct and >= 0
    cdef int bits = 1
    while (1 << bits) < 2 * n:
        bits += 1
    cdef Py_ssize_t size = 1 << bits, mask = size - 1, h
    cdef int shift = 64 - bits
    hkeys_arr = np.full(size, -1, dtype=np.int64)
    hvals_arr = np.zeros(size, dtype=np.int32)
    cdef long long[::1] HK = hkeys_arr
    cdef int[::1] HV = hvals_arr
    cdef Py_ssize_t i, j, t
    cdef long long key
    # images of the base points, one row per element
    bimg_arr = np.empty((n, k), dtype=np.int64)
    cdef long long[:, ::1] BI = bimg_arr
    with nogil:
        for i in range(n):
            h = _slot(K[i], shift)
            while HK[h] != -1:
                h = (h + 1) & mask
            HK[h] = K[i]
            HV[h] = <int>O[i]
        for j in range(n):
            for t in range(k):
                BI[j, t] = P[j, B[t]]
        for i in range(n):
            for j in range(n):
                key = 0
                for t in range(k):
                    key = key + P[i, BI[j, t]] * W[t]
                h = _slot(key, shift)
                while HK[h] != key:
                    h = (h + 1) & mask
                T[i, j] = HV[h]
    return out


def class_labels(table, inv):
    cdef const int[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef const long long[::1] I = np.ascontiguousarray(inv, dtype=np.int64)
    cdef Py_ssize_t n = T.shape[0], x, g
    labels = np.full(n, -1, dtype=np.int64)
    cdef long long[::1] L = labels
    cdef long long nxt = 0
    with nogil:
        for x in range(n):
            if L[x] >= 0:
                continue
            for g in range(n):
                L[T[T[g, x], I[g]]] = nxt
            nxt += 1
    return labels


def convolve_int64(table, a_idx, a_coef, b_idx, b_coef):
    cdef const int[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef const long long[::1] ai = np.ascontiguousarray(a_idx, dtype=np.int64)
    cdef const long long[::1] ac = np.ascontiguousarray(a_coef, dtype=np.int64)
    cdef const long long[::1] bi = np.ascontiguousarray(b_idx, dtype=np.int64)
    cdef const long long[::1] bc = np.ascontiguousarray(b_coef, dtype=np.int64)
    out = np.zeros(T.shape[0], dtype=np.int64)
    cdef long long[::1] R = out
    cdef Py_ssize_t s, t
    with nogil:
        for s in range(ai.shape[0]):
            for t in range(bi.shape[0]):
                R[T[ai[s], bi[t]]] += ac[s] * bc[t]
    return out


def echelon(rows):
    """Integer row echelon form; see ``_pykernels.echelon``.

    Object (big-int) input is delegated to the pure version.
    """
    arr = np.asarray(rows)
    if arr.dtype != np.int64:
        from . import _pykernels
        return _pykernels.echelon(arr)
    m = np.array(arr, dtype=np.int64, copy=True, order="C")
    cdef long long[:, ::1] M = m
    cdef Py_ssize_t nrows = M.shape[0], ncols = M.shape[1]
    cdef Py_ssize_t r = 0, j, i, c, best
    cdef long long piv, q, prod, tmp, mag, bestmag
    cdef bint overflow = False, more
    pivots = []
    for j in range(ncols):
        if r >= nrows:
            break
        with nogil:
            while True:
                best = -1
                bestmag = 0
                more = False
                for i in range(r, nrows):
                    if M[i, j] != 0:
                        mag = llabs(M[i, j])
                        if best < 0 or mag < bestmag:
                            if best >= 0:
                                more = True
                            best = i
                            bestmag = mag
                        else:
                            more = True
                if best < 0:
                    break
                if best != r:
                    for c in range(ncols):
                        tmp = M[r, c]
                        M[r, c] = M[best, c]
                        M[best, c] = tmp
                if not more:
                    break
                piv = M[r, j]
                for i in range(r + 1, nrows):
                    if M[i, j] == 0:
                        continue
                    # floor division, matching Python semantics
                    q = M[i, j] / piv
                    if (M[i, j] % piv != 0) and ((M[i, j] < 0) != (piv < 0)):
                        q -= 1
                    for c in range(ncols):
                        if M[r, c] == 0:
                            continue
                        if _mul_ovf(q, M[r, c], &prod) or _sub_ovf(M[i, c], prod, &tmp):
                            overflow = True
                            break
                        M[i, c] = tmp
                    if overflow:
                        break
                if overflow:
                    break
        if overflow:
            return m[:r], pivots, True
        if M[r, j] != 0:
            if M[r, j] < 0:
                for c in range(ncols):
                    M[r, c] = -M[r, c]
            pivots.append(j)
            r += 1
    return m[:r], pivots, False
