# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset kernels; same contracts as ``_pykernels``.

Column words and subset masks must fit in 63 bits; the dispatcher in
``kernels`` routes anything wider to the pure-Python versions.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint32_t, uint8_t

cnp.import_array()


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _high_bit(uint64_t v) noexcept nogil:
    return 63 - __builtin_clzll(v)


def column_rank(cols):
    cdef uint64_t basis[64]
    cdef uint64_t v
    cdef int h, r = 0
    cdef int i
    for i in range(64):
        basis[i] = 0
    for c in cols:
        v = <uint64_t>c
        while v:
            h = _high_bit(v)
            if basis[h] == 0:
                basis[h] = v
                r += 1
                break
            v ^= basis[h]
    return r


def rank_table(cols):
    """Rank of every subset: ``|S| - log2 #{cycles inside S}``.

    The cycle space is spanned in Gray-code order, then a subset-sum pass
    counts the cycles contained in each subset.
    """
    cdef int n = len(cols)
    if n > 30:
        raise ValueError("rank table limited to 30 elements")
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef cnp.ndarray[uint8_t, ndim=1] out = np.empty(size, dtype=np.uint8)
    cdef cnp.ndarray[uint32_t, ndim=1] counts_arr = np.zeros(size, dtype=np.uint32)
    cdef uint32_t* counts = <uint32_t*>counts_arr.data
    cdef uint8_t* res = <uint8_t*>out.data
    cdef uint64_t vec[64]
    cdef uint64_t msk[64]
    cdef uint64_t cycles[64]
    cdef uint64_t v, m, cur
    cdef int i, h, e, n_cycles = 0
    cdef Py_ssize_t s, step, block, lo
    for i in range(64):
        vec[i] = 0
        msk[i] = 0
    for e in range(n):
        v = <uint64_t>cols[e]
        m = (<uint64_t>1) << e
        while v:
            h = _high_bit(v)
            if vec[h] == 0:
                vec[h] = v
                msk[h] = m
                break
            v ^= vec[h]
            m ^= msk[h]
        if v == 0:
            cycles[n_cycles] = m
            n_cycles += 1
    with nogil:
        cur = 0
        counts[0] = 1
        for s in range(1, (<Py_ssize_t>1) << n_cycles):
            cur ^= cycles[__builtin_ctzll(<unsigned long long>s)]
            counts[cur] = 1
        step = 1
        while step < size:
            block = step << 1
            lo = 0
            while lo < size:
                for s in range(lo + step, lo + block):
                    counts[s] += counts[s - step]
                lo += block
            step = block
        for s in range(size):
            res[s] = __builtin_popcountll(<unsigned long long>s) - __builtin_ctzll(<unsigned long long>counts[s])
    return out


cdef inline bint _lex_less(uint64_t a, uint64_t b) noexcept nogil:
    # sorted-tuple order on sets given as masks
    cdef uint64_t diff = a ^ b
    cdef uint64_t low, below
    if diff == 0:
        return False
    low = diff & (~diff + 1)
    below = low - 1
    if a & low:
        # a continues with d; b is smaller only if it stops here
        return (b & ~below) != 0
    return (a & ~below) == 0


def least_separation(ranks, int n, int r, int j):
    cdef cnp.ndarray[uint8_t, ndim=1] rt = np.ascontiguousarray(ranks, dtype=np.uint8)
    cdef uint8_t* t = <uint8_t*>rt.data
    cdef uint64_t full, a, b, best = 0
    cdef bint found = False
    cdef int pa, pb
    if n < 2:
        return -1
    full = ((<uint64_t>1) << n) - 1
    with nogil:
        a = 1
        while a < full:
            b = full ^ a
            pa = __builtin_popcountll(a)
            pb = n - pa
            if pa >= j and pb >= j and <int>t[a] + <int>t[b] - r <= j - 1:
                if not found or _lex_less(a, best):
                    best = a
                    found = True
            a += 2
    return <int64_t>best if found else -1


def minimal_supports(basis):
    """Minimal non-empty supports in the span of ``basis`` (Gray-code walk)."""
    cdef int d = len(basis)
    cdef uint64_t[64] bv
    cdef Py_ssize_t total = (<Py_ssize_t>1) << d
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] vecs = np.empty(total - 1 if total > 1 else 0, dtype=np.uint64)
    cdef uint64_t* vp = <uint64_t*>vecs.data
    cdef uint64_t cur = 0
    cdef Py_ssize_t g, kept_n = 0, q
    cdef int i
    for i in range(d):
        bv[i] = <uint64_t>basis[i]
    with nogil:
        for g in range(1, total):
            cur ^= bv[__builtin_ctzll(<uint64_t>g)]
            vp[g - 1] = cur
    if total <= 1:
        return []
    cdef cnp.ndarray[cnp.int64_t, ndim=1] weights = np.empty(total - 1, dtype=np.int64)
    cdef int64_t* wp = <int64_t*>weights.data
    with nogil:
        for g in range(total - 1):
            wp[g] = __builtin_popcountll(vp[g])
    order = np.lexsort((vecs, weights))
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] sv = np.ascontiguousarray(vecs[order])
    cdef uint64_t* sp = <uint64_t*>sv.data
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] kept = np.empty(total - 1, dtype=np.uint64)
    cdef uint64_t* kp = <uint64_t*>kept.data
    cdef uint64_t v
    cdef bint minimal
    with nogil:
        for g in range(total - 1):
            v = sp[g]
            minimal = True
            for q in range(kept_n):
                if kp[q] & v == kp[q]:
                    minimal = False
                    break
            if minimal:
                kp[kept_n] = v
                kept_n += 1
    return [int(kept[q]) for q in range(kept_n)]
