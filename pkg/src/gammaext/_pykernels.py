"""Pure-Python/numpy implementations of the subset kernels.

Vectors are integers; a column vector has bit ``i`` set for row ``i`` and a
subset of the ground set has bit ``e`` set for element ``e``.  The compiled
module ``_kernels`` exposes the same four functions.
"""

from __future__ import annotations

import numpy as np


def column_rank(cols):
    basis = {}
    for v in cols:
        while v:
            high = v.bit_length() - 1
            b = basis.get(high)
            if b is None:
                basis[high] = v
                break
            v ^= b
    return len(basis)


def _cycle_basis(cols):
    """Element masks spanning the dependencies among ``cols``."""
    basis = {}  # pivot bit -> (vector, element mask)
    cycles = []
    for e, v in enumerate(cols):
        mask = 1 << e
        while v:
            high = v.bit_length() - 1
            hit = basis.get(high)
            if hit is None:
                basis[high] = (v, mask)
                break
            v ^= hit[0]
            mask ^= hit[1]
        else:
            cycles.append(mask)
    return cycles


def _span(basis):
    out = np.zeros(1, dtype=np.int64)
    for b in basis:
        out = np.concatenate([out, out ^ np.int64(b)])
    return out


def rank_table(cols):
    """Rank of every subset of ``cols``, indexed by subset mask.

    Counts the dependencies supported inside each subset with a subset-sum
    (zeta) transform: ``rank(S) = |S| - log2 #{cycles within S}``.
    """
    n = len(cols)
    size = 1 << n
    counts = np.zeros(size, dtype=np.int64)
    counts[_span(_cycle_basis(cols))] = 1
    for e in range(n):
        view = counts.reshape(-1, 2, 1 << e)
        view[:, 1, :] += view[:, 0, :]
    nullity = np.zeros(size, dtype=np.uint8)
    nullity[:] = np.log2(counts).round().astype(np.uint8)
    popcount = _popcounts(n)
    return (popcount - nullity).astype(np.uint8)


def _popcounts(n):
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        pc = np.concatenate([pc, pc + 1])
    return pc


def least_separation(ranks, n, r, j):
    """Lexicographically least ``j``-separation side containing element 0.

    Returns its mask, or -1.  Sets are compared as sorted tuples of element
    indices, so a proper prefix sorts first.
    """
    if n < 2:
        return -1
    ranks = np.asarray(ranks, dtype=np.int64)
    full = (1 << n) - 1
    a = np.arange(1, 1 << n, 2, dtype=np.int64)
    a = a[a != full]
    b = full ^ a
    pc = _popcounts(n).astype(np.int64)
    ok = (np.minimum(pc[a], pc[b]) >= j) & (ranks[a] + ranks[b] - r <= j - 1)
    cand = a[ok]
    if cand.size == 0:
        return -1
    prefix = np.int64(1)
    while True:
        if np.any(cand == prefix):
            return int(prefix)
        rest = cand ^ prefix
        low = rest & -rest
        nxt = low.min()
        cand = cand[low == nxt]
        prefix |= nxt


def minimal_supports(basis):
    """Minimal non-empty supports among all combinations of ``basis``."""
    vecs = _span(basis)[1:]
    if vecs.size == 0:
        return []
    weights = np.array([int(v).bit_count() for v in vecs])
    vecs = vecs[np.lexsort((vecs, weights))]
    kept = np.zeros(0, dtype=np.int64)
    for v in vecs:
        if kept.size and np.any((kept & v) == kept):
            continue
        kept = np.append(kept, v)
    return [int(v) for v in kept]
