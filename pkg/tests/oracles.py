"""Slow, obviously-correct reference implementations used as test oracles.

Everything here works on plain Python lists of column vectors (ints) and
subset enumeration; nothing calls into the package's algorithms.
"""

from __future__ import annotations

import itertools


def column_ints(lists):
    """Column words (bit i = row i) from a list-of-rows 0/1 matrix."""
    n_cols = len(lists[0]) if lists else 0
    return [sum(row[j] << i for i, row in enumerate(lists)) for j in range(n_cols)]


def span(vectors) -> set:
    out = {0}
    for v in vectors:
        out |= {w ^ v for w in out}
    return out


def rank(vectors) -> int:
    # log2 of the span size; exponential but independent of elimination
    return len(span(vectors)).bit_length() - 1


def rank_of(cols, subset) -> int:
    return rank([cols[i] for i in subset])


def subsets(n):
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def dependent(cols, subset) -> bool:
    return rank_of(cols, subset) < len(subset)


def circuits(cols) -> set:
    """Minimal dependent subsets, as frozensets of column indices."""
    found = []
    for s in subsets(len(cols)):
        if not s or not dependent(cols, s):
            continue
        fs = frozenset(s)
        if not any(c <= fs for c in found):
            found.append(fs)
    return set(found)


def cocircuits(cols) -> set:
    """Minimal sets whose removal lowers the rank."""
    n = len(cols)
    r = rank(cols)
    found = []
    for s in subsets(n):
        if not s:
            continue
        rest = [i for i in range(n) if i not in s]
        if rank_of(cols, rest) == r:
            continue
        fs = frozenset(s)
        if not any(c <= fs for c in found):
            found.append(fs)
    return set(found)


def separations(cols, j):
    """Every unordered j-separation, each side as a sorted index tuple."""
    n = len(cols)
    r = rank(cols)
    out = []
    for size in range(j, n - j + 1):
        for a in itertools.combinations(range(n), size):
            b = tuple(i for i in range(n) if i not in a)
            if a > b:
                continue
            if rank_of(cols, a) + rank_of(cols, b) - r <= j - 1:
                out.append((a, b))
    return out


def components(cols) -> set:
    """Classes of the 'share a circuit' relation, singletons included."""
    n = len(cols)
    classes = [{i} for i in range(n)]
    for c in circuits(cols):
        merged = set(c)
        keep = []
        for cls in classes:
            if cls & merged:
                merged |= cls
            else:
                keep.append(cls)
        classes = keep + [merged]
    return {frozenset(c) for c in classes}
