"""Exhaustive k-separation search and k-connectivity decisions.

A ``j``-separation is a bipartition ``(A, B)`` of the ground set with
``min(|A|, |B|) >= j`` and ``r(A) + r(B) - r(M) <= j - 1``.  Two notions of
k-connectivity are offered: ``"paper"`` forbids only ``(k-1)``-separations,
``"cumulative"`` forbids every ``j``-separation with ``j < k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import SizeError
from .matroid import BinaryMatroid, label_key, sort_labels
from .reports import FAIL, PASS, LawReport

SEPARATION_BOUND = 20
MODES = ("paper", "cumulative")


@dataclass(frozen=True)
class Separation:
    side_a: frozenset
    side_b: frozenset
    order: int

    def as_lists(self) -> tuple[list[str], list[str]]:
        return sort_labels(self.side_a), sort_labels(self.side_b)


class _SortedView:
    """Columns of ``m`` permuted into natural label order, with rank table."""

    def __init__(self, m: BinaryMatroid):
        self.order = sorted(range(len(m)), key=lambda i: label_key(m.labels[i]))
        self.labels = [m.labels[i] for i in self.order]
        self.ranks = kernels.rank_table([m.columns[i] for i in self.order])
        self.rank = m.rank
        self.n = len(m)

    def subset(self, mask: int) -> frozenset:
        return frozenset(x for i, x in enumerate(self.labels) if mask >> i & 1)


def _view(m: BinaryMatroid, bound: int) -> _SortedView:
    if len(m) > bound:
        raise SizeError(f"{len(m)} elements exceed the separation-search bound {bound}")
    view = m.__dict__.get("_sorted_view")
    if view is None:
        view = m.__dict__["_sorted_view"] = _SortedView(m)
    return view


def find_separation(m: BinaryMatroid, j: int, bound: int = SEPARATION_BOUND) -> Separation | None:
    """Least ``j``-separation, comparing sorted ``side_a`` lexicographically.

    ``side_a`` always holds the least label, which fixes the orientation.
    """
    if j < 1:
        raise ValueError("separation order must be at least 1")
    view = _view(m, bound)
    mask = kernels.least_separation(view.ranks, view.n, view.rank, j)
    if mask < 0:
        return None
    full = (1 << view.n) - 1
    return Separation(view.subset(mask), view.subset(full ^ mask), j)


def is_separation(m: BinaryMatroid, side_a, side_b, j: int) -> bool:
    """Direct check of the definition, independent of the search."""
    a, b = frozenset(side_a), frozenset(side_b)
    if a & b or a | b != m.ground_set or not a or not b:
        return False
    return min(len(a), len(b)) >= j and m.rank_of(a) + m.rank_of(b) - m.rank <= j - 1


def connectivity_witness(m: BinaryMatroid, k: int, mode: str = "paper",
                         bound: int = SEPARATION_BOUND) -> Separation | None:
    """A separation showing ``m`` is not k-connected, or None."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if mode == "paper":
        return find_separation(m, k - 1, bound)
    if mode == "cumulative":
        for j in range(1, k):
            sep = find_separation(m, j, bound)
            if sep is not None:
                return sep
        return None
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def is_k_connected(m: BinaryMatroid, k: int, mode: str = "paper",
                   bound: int = SEPARATION_BOUND) -> bool:
    return connectivity_witness(m, k, mode, bound) is None


def connectivity_level(m: BinaryMatroid, mode: str = "paper", limit: int = 6) -> int:
    """Largest ``k <= limit`` such that ``m`` is k-connected (1 if none)."""
    best = 1
    for k in range(2, limit + 1):
        if is_k_connected(m, k, mode):
            best = k
        elif mode == "cumulative":
            break
    return best


def girth_bound_check(m: BinaryMatroid, k: int) -> LawReport:
    """Every circuit and cocircuit has at least ``k`` elements.

    The preconditions (k-connected, at least ``2(k-1)`` elements) are
    recorded in ``notes`` but not enforced.
    """
    girth, cogirth = m.girth(), m.cogirth()
    notes = {
        "k_connected": is_k_connected(m, k),
        "size_ok": len(m) >= 2 * (k - 1),
        "girth": girth,
        "cogirth": cogirth,
    }
    instance = f"n={len(m)} r={m.rank} k={k}"
    if girth >= k and cogirth >= k:
        return LawReport("girth-bound", instance, PASS, notes=notes)
    small = [c for c in m.circuits() if len(c) < k] or [c for c in m.cocircuits() if len(c) < k]
    kind = "circuit" if girth < k else "cocircuit"
    return LawReport("girth-bound", instance, FAIL,
                     counterexample={kind: sort_labels(small[0])}, notes=notes)
