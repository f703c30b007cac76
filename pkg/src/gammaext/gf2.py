"""Dense linear algebra over GF(2).

Rows are stored as Python integers, bit ``j`` holding the entry in column
``j``.  Elimination is therefore a sequence of word-level XORs and works for
any width, although everything in this package stays well below 64 columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, LoopError


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable ``n_rows x n_cols`` bit matrix."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionError("negative dimension")
        if len(self.rows) != self.n_rows:
            raise DimensionError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = 1 << self.n_cols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise DimensionError(f"row {row:b} does not fit in {self.n_cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n_cols: int | None = None) -> Gf2Matrix:
        rows = [list(r) for r in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        packed = []
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {n_cols}")
            word = 0
            for j, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) = {bit!r} is not binary")
                if bit:
                    word |= 1 << j
            packed.append(word)
        return cls(len(packed), n_cols, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[int], n_rows: int) -> Gf2Matrix:
        """Build from column words (bit ``i`` is the entry in row ``i``)."""
        rows = [0] * n_rows
        for j, col in enumerate(columns):
            if col >> n_rows:
                raise DimensionError(f"column {j} does not fit in {n_rows} rows")
            for i in range(n_rows):
                if col >> i & 1:
                    rows[i] |= 1 << j
        return cls(n_rows, len(columns), tuple(rows))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> Gf2Matrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(index)
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n_cols)] for row in self.rows]

    def column(self, j: int) -> int:
        if not 0 <= j < self.n_cols:
            raise IndexError(j)
        word = 0
        for i, row in enumerate(self.rows):
            if row >> j & 1:
                word |= 1 << i
        return word

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(self.n_cols, self.n_rows, tuple(self.columns()))

    def select_columns(self, indices: Sequence[int]) -> Gf2Matrix:
        rows = []
        for row in self.rows:
            word = 0
            for k, j in enumerate(indices):
                if row >> j & 1:
                    word |= 1 << k
            rows.append(word)
        return Gf2Matrix(self.n_rows, len(indices), tuple(rows))

    def append_row(self, row: int | Sequence[int]) -> Gf2Matrix:
        if not isinstance(row, int):
            row = Gf2Matrix.from_rows([row], self.n_cols).rows[0]
        return Gf2Matrix(self.n_rows + 1, self.n_cols, self.rows + (row,))

    def hstack(self, other: Gf2Matrix) -> Gf2Matrix:
        if other.n_rows != self.n_rows:
            raise DimensionError("row counts differ")
        rows = tuple(a | b << self.n_cols for a, b in zip(self.rows, other.rows))
        return Gf2Matrix(self.n_rows, self.n_cols + other.n_cols, rows)

    def nonzero_rows(self) -> Gf2Matrix:
        rows = tuple(r for r in self.rows if r)
        return Gf2Matrix(len(rows), self.n_cols, rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.to_lists())


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row echelon form and the ordered pivot columns.

    The pivot row for each column is the topmost unused row with a one in it.
    Zero rows end up at the bottom.
    """
    rows = list(m.rows)
    pivots = []
    top = 0
    for j in range(m.n_cols):
        if top == len(rows):
            break
        bit = 1 << j
        for i in range(top, len(rows)):
            if rows[i] & bit:
                break
        else:
            continue
        rows[top], rows[i] = rows[i], rows[top]
        pivot_row = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= pivot_row
        pivots.append(j)
        top += 1
    return Gf2Matrix(m.n_rows, m.n_cols, tuple(rows)), pivots


def rank(m: Gf2Matrix) -> int:
    basis: dict[int, int] = {}
    for row in m.rows:
        while row:
            high = row.bit_length() - 1
            if high not in basis:
                basis[high] = row
                break
            row ^= basis[high]
    return len(basis)


def row_space_equal(m1: Gf2Matrix, m2: Gf2Matrix) -> bool:
    if m1.n_cols != m2.n_cols:
        raise DimensionError(f"widths differ: {m1.n_cols} vs {m2.n_cols}")
    r1 = rref(m1)[0].nonzero_rows()
    r2 = rref(m2)[0].nonzero_rows()
    return r1.rows == r2.rows


def standard_form(m: Gf2Matrix, labels: Sequence) -> tuple[Gf2Matrix, list]:
    """Return ``[I_r | D]`` and the column labels in their new order.

    Dependent rows are dropped.  The basis columns are the rref pivots in
    order, followed by the remaining columns in their original order.
    """
    labels = list(labels)
    if len(labels) != m.n_cols:
        raise DimensionError(f"{len(labels)} labels for {m.n_cols} columns")
    for j, col in enumerate(m.columns()):
        if col == 0:
            raise LoopError(labels[j])
    reduced, pivots = rref(m)
    reduced = reduced.nonzero_rows()
    pivot_set = set(pivots)
    order = pivots + [j for j in range(m.n_cols) if j not in pivot_set]
    return reduced.select_columns(order), [labels[j] for j in order]
