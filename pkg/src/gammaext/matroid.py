"""Binary matroids given by a labeled GF(2) representation."""

from __future__ import annotations

import re
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import ColoopError, DimensionError, EmptyError, LabelError, LoopError, SizeError
from .gf2 import Gf2Matrix, rref, row_space_equal

ElementSet = frozenset

CIRCUIT_BOUND = 16

_CHUNK = re.compile(r"(\d+)")


def label_key(label: str):
    """Natural ordering: digit runs compare numerically, so "2" < "10" < "g1"."""
    parts = _CHUNK.split(label)
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p)


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


def set_key(s: Iterable[str]):
    return tuple(label_key(x) for x in sort_labels(s))


def sort_family(family: Iterable[Iterable[str]]) -> list[frozenset]:
    return sorted((frozenset(s) for s in family), key=set_key)


def element_set(items: Iterable) -> frozenset:
    if isinstance(items, str):
        items = [items]
    return frozenset(str(x) for x in items)


class BinaryMatroid:
    """Vector matroid of a GF(2) matrix with string-labeled columns.

    The stored representation is the rref of the input with zero rows
    dropped and columns kept in label order, so the pivot columns carry an
    identity block.  With ``strict=True`` (the default) loops and coloops
    are rejected.
    """

    def __init__(self, matrix: Gf2Matrix, labels: Sequence, *, strict: bool = True):
        labels = tuple(str(x) for x in labels)
        if len(labels) != matrix.n_cols:
            raise DimensionError(f"{len(labels)} labels for {matrix.n_cols} columns")
        if len(set(labels)) != len(labels):
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise LabelError(f"duplicate labels: {', '.join(dup)}")
        reduced, pivots = rref(matrix)
        self._rep = reduced.nonzero_rows()
        self._pivots = tuple(pivots)
        self._labels = labels
        self._index = {x: i for i, x in enumerate(labels)}
        self._cols = tuple(self._rep.columns())
        self.strict = strict
        if strict:
            self._validate()

    def _validate(self):
        for label, col in zip(self._labels, self._cols):
            if col == 0:
                raise LoopError(label)
        r = self.rank
        for i, label in enumerate(self._labels):
            rest = self._cols[:i] + self._cols[i + 1:]
            if kernels.column_rank(rest) < r:
                raise ColoopError(label)

    # -- basic accessors -------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self._labels)

    @property
    def rep(self) -> Gf2Matrix:
        return self._rep

    @property
    def columns(self) -> tuple[int, ...]:
        return self._cols

    @property
    def rank(self) -> int:
        return self._rep.n_rows

    def __len__(self):
        return len(self._labels)

    def __repr__(self):
        return f"BinaryMatroid(rank={self.rank}, labels={list(self._labels)})"

    def standard_representation(self) -> tuple[Gf2Matrix, list[str]]:
        """``[I_r | D]`` with the labels permuted to match."""
        order = self._std_order()
        return self._rep.select_columns(order), [self._labels[j] for j in order]

    def _std_order(self):
        piv = set(self._pivots)
        return list(self._pivots) + [j for j in range(len(self)) if j not in piv]

    def mask(self, s: Iterable[str]) -> int:
        out = 0
        for x in element_set(s):
            try:
                out |= 1 << self._index[x]
            except KeyError:
                raise LabelError(f"unknown label {x!r}") from None
        return out

    def subset(self, mask: int) -> frozenset:
        return frozenset(x for i, x in enumerate(self._labels) if mask >> i & 1)

    # -- rank oracle ------------------------------------------------------

    def rank_of(self, s: Iterable[str]) -> int:
        m = self.mask(s)
        return kernels.column_rank(c for i, c in enumerate(self._cols) if m >> i & 1)

    def is_independent(self, s: Iterable[str]) -> bool:
        s = element_set(s)
        return self.rank_of(s) == len(s)

    def rank_table(self):
        """Ranks of all subsets, indexed by :meth:`mask`."""
        return self._rank_table

    @cached_property
    def _rank_table(self):
        return kernels.rank_table(self._cols)

    # -- circuits ---------------------------------------------------------

    def _check_bound(self, bound):
        if len(self) > bound:
            raise SizeError(f"{len(self)} elements exceed the exhaustive bound {bound}")

    def cycle_basis(self) -> list[int]:
        """Masks of the fundamental circuits of the pivot basis."""
        out = []
        piv = set(self._pivots)
        for j in range(len(self)):
            if j in piv:
                continue
            m = 1 << j
            for i, p in enumerate(self._pivots):
                if self._rep.rows[i] >> j & 1:
                    m |= 1 << p
            out.append(m)
        return out

    def circuits(self, bound: int = CIRCUIT_BOUND) -> tuple[frozenset, ...]:
        self._check_bound(bound)
        return self._circuits

    @cached_property
    def _circuits(self):
        return tuple(sort_family(self.subset(m) for m in kernels.minimal_supports(self.cycle_basis())))

    def circuit_masks(self, bound: int = CIRCUIT_BOUND) -> list[int]:
        return [self.mask(c) for c in self.circuits(bound)]

    def cocircuits(self, bound: int = CIRCUIT_BOUND) -> tuple[frozenset, ...]:
        self._check_bound(bound)
        return self._cocircuits

    @cached_property
    def _cocircuits(self):
        return tuple(sort_family(self.subset(m) for m in kernels.minimal_supports(self._rep.rows)))

    def girth(self, bound: int = CIRCUIT_BOUND) -> float:
        sizes = [len(c) for c in self.circuits(bound)]
        return min(sizes) if sizes else float("inf")

    def cogirth(self, bound: int = CIRCUIT_BOUND) -> float:
        sizes = [len(c) for c in self.cocircuits(bound)]
        return min(sizes) if sizes else float("inf")

    def dual(self) -> BinaryMatroid:
        """``[I_r | D]`` becomes ``[D^T | I_{n-r}]`` on the same labels."""
        order = self._std_order()
        std = self._rep.select_columns(order)
        r, n = self.rank, len(self)
        d_t = std.select_columns(range(r, n)).transpose()
        dual_std = d_t.hstack(Gf2Matrix.identity(n - r))
        back = [0] * n
        for pos, j in enumerate(order):
            back[j] = pos
        return BinaryMatroid(dual_std.select_columns(back), self._labels, strict=self.strict)

    # -- minors, sums, components ----------------------------------------

    def delete(self, y: Iterable[str], *, strict: bool = True) -> BinaryMatroid:
        drop = self.mask(y)
        keep = [i for i in range(len(self)) if not drop >> i & 1]
        if not keep:
            raise EmptyError("cannot delete the whole ground set")
        return BinaryMatroid(self._rep.select_columns(keep),
                             [self._labels[i] for i in keep], strict=strict)

    def restrict(self, s: Iterable[str], *, strict: bool = False) -> BinaryMatroid:
        return self.delete(self.ground_set - element_set(s), strict=strict)

    def components(self, bound: int = CIRCUIT_BOUND) -> list[frozenset]:
        parent = list(range(len(self)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for c in self.circuit_masks(bound):
            members = [i for i in range(len(self)) if c >> i & 1]
            root = find(members[0])
            for i in members[1:]:
                parent[find(i)] = root
        blocks = {}
        for i, x in enumerate(self._labels):
            blocks.setdefault(find(i), set()).add(x)
        return sort_family(blocks.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- equality ---------------------------------------------------------

    def equals(self, other: BinaryMatroid) -> bool:
        if self.ground_set != other.ground_set:
            return False
        aligned = other._rep.select_columns([other._index[x] for x in self._labels])
        return row_space_equal(self._rep, aligned)

    def canonical_key(self):
        """Hashable key shared exactly by equal labeled matroids."""
        order = sorted(range(len(self)), key=lambda i: label_key(self._labels[i]))
        reduced = rref(self._rep.select_columns(order))[0]
        return (tuple(self._labels[i] for i in order), reduced.rows)

    def __eq__(self, other):
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(self.canonical_key())


def direct_sum(*parts: BinaryMatroid) -> BinaryMatroid:
    """Block-diagonal sum; labels become ``<label>_<i>`` if any collide."""
    if not parts:
        raise EmptyError("direct sum of nothing")
    all_labels = [x for p in parts for x in p.labels]
    rename = len(set(all_labels)) != len(all_labels)
    labels, rows, offset = [], [], 0
    for k, p in enumerate(parts, start=1):
        labels += [f"{x}_{k}" if rename else x for x in p.labels]
        rows += [row << offset for row in p.rep.rows]
        offset += len(p)
    matrix = Gf2Matrix(len(rows), offset, tuple(rows))
    return BinaryMatroid(matrix, labels, strict=all(p.strict for p in parts))
