"""Named fixture matroids and exhaustive enumeration of small binary matroids."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from .connectivity import is_k_connected
from .errors import MatroidError, SizeError
from .gf2 import Gf2Matrix, rank
from .matroid import BinaryMatroid, direct_sum

MAX_RANK = 5
MAX_SIZE = 12


def _from_columns(columns, n_rows, labels, strict=True) -> BinaryMatroid:
    return BinaryMatroid(Gf2Matrix.from_columns(columns, n_rows), labels, strict=strict)


def _vec(bits) -> int:
    """Column word from a top-to-bottom bit tuple."""
    return sum(b << i for i, b in enumerate(bits))


def fano() -> BinaryMatroid:
    a = Gf2Matrix.from_rows([
        [1, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 1, 1, 0, 1],
    ])
    return BinaryMatroid(a, [str(i) for i in range(1, 8)])


def u23() -> BinaryMatroid:
    return BinaryMatroid(Gf2Matrix.from_rows([[1, 0, 1], [0, 1, 1]]), ["a", "b", "c"])


def ag32() -> BinaryMatroid:
    """Rank 4: columns ``(1, x, y, z)`` for all ``(x, y, z)`` in lexicographic order."""
    cols = [_vec((1,) + p) for p in itertools.product((0, 1), repeat=3)]
    return _from_columns(cols, 4, [str(i) for i in range(1, 9)])


def k4_cycle() -> BinaryMatroid:
    """Cycle matroid of K4: vertex-edge incidence rows, last vertex dropped."""
    edges = list(itertools.combinations(range(4), 2))
    cols = [sum(1 << v for v in e if v < 3) for e in edges]
    return _from_columns(cols, 3, ["abcd"[u] + "abcd"[v] for u, v in edges])


def k5_cycle() -> BinaryMatroid:
    edges = list(itertools.combinations(range(5), 2))
    cols = [sum(1 << v for v in e if v < 4) for e in edges]
    return _from_columns(cols, 4, ["abcde"[u] + "abcde"[v] for u, v in edges])


def k33_cycle() -> BinaryMatroid:
    edges = [(u, v) for u in range(3) for v in range(3, 6)]
    cols = [sum(1 << w for w in e if w < 5) for e in edges]
    return _from_columns(cols, 5, ["abcdef"[u] + "abcdef"[v] for u, v in edges])


def r10() -> BinaryMatroid:
    """The 10-element regular matroid: all weight-3 vectors of GF(2)^5."""
    cols = [sum(1 << i for i in c) for c in itertools.combinations(range(5), 3)]
    return _from_columns(cols, 5, [str(i) for i in range(1, 11)])


NAMED: dict[str, Callable[[], BinaryMatroid]] = {
    "fano": fano,
    "u23": u23,
    "ag32": ag32,
    "k4-cycle": k4_cycle,
    "k5-cycle": k5_cycle,
    "k33-cycle": k33_cycle,
    "r10": r10,
}


def named(name: str) -> BinaryMatroid:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown catalog matroid {name!r}; known: {', '.join(NAMED)}") from None


def points(r: int) -> list[int]:
    """Nonzero vectors of GF(2)^r in lexicographic order, top row most significant."""
    return [_vec(p) for p in itertools.product((0, 1), repeat=r) if any(p)]


def _filter(spec: str | None) -> Callable[[BinaryMatroid], bool]:
    if spec in (None, "", "all"):
        return lambda m: True
    if spec == "connected":
        return lambda m: m.is_connected()
    if spec == "disconnected":
        return lambda m: not m.is_connected()
    if spec.endswith("-connected"):
        k = int(spec.split("-")[0])
        return lambda m: is_k_connected(m, k)
    raise ValueError(f"unknown filter {spec!r}")


def enumerate_matroids(r: int, n: int, filter: str | None = None, *,
                       parallel: bool = False, dedupe: bool = True,
                       max_rank: int = MAX_RANK, max_size: int = MAX_SIZE) -> Iterator[BinaryMatroid]:
    """All labeled loopless, coloopless rank-``r`` matroids on ``n`` chosen points.

    Columns are drawn from the nonzero vectors of GF(2)^r in lexicographic
    order (with repetition when ``parallel``), labeled ``1..n``, and must
    span.  Duplicates up to labeled equality are dropped when ``dedupe``.
    ``filter`` is one of ``connected``, ``disconnected`` or ``<k>-connected``.
    """
    if r > max_rank or n > max_size:
        raise SizeError(f"(r={r}, n={n}) exceeds the enumeration bound ({max_rank}, {max_size})")
    keep = _filter(filter)
    labels = [str(i) for i in range(1, n + 1)]
    pick = itertools.combinations_with_replacement if parallel else itertools.combinations
    seen = set()
    for cols in pick(points(r), n):
        matrix = Gf2Matrix.from_columns(cols, r)
        if rank(matrix) < r:
            continue
        try:
            m = BinaryMatroid(matrix, labels)
        except MatroidError:
            continue
        if dedupe:
            key = m.canonical_key()
            if key in seen:
                continue
            seen.add(key)
        if keep(m):
            yield m


@dataclass
class CatalogEntry:
    name: str
    matroid: BinaryMatroid
    extra_tags: frozenset = field(default_factory=frozenset)

    @cached_property
    def tags(self) -> frozenset:
        """Kinds plus every ``k <= 5`` for which the matroid is k-connected.

        k-connectivity here only forbids ``(k-1)``-separations, so the levels
        need not be consecutive (F7 is 5-connected but not 4-connected).
        """
        m = self.matroid
        tags = set(self.extra_tags)
        tags.add("connected" if m.is_connected() else "disconnected")
        tags.update(f"{k}-connected" for k in range(2, 6) if is_k_connected(m, k))
        return frozenset(tags)


def entries(r: int, n: int, filter: str | None = None, **kw) -> Iterator[CatalogEntry]:
    for i, m in enumerate(enumerate_matroids(r, n, filter, **kw)):
        yield CatalogEntry(f"r{r}n{n}-{i:04d}", m, frozenset({"enumerated"}))


def named_entries(max_size: int | None = None) -> list[CatalogEntry]:
    out = []
    for name, make in NAMED.items():
        m = make()
        if max_size is None or len(m) <= max_size:
            out.append(CatalogEntry(name, m, frozenset({"named"})))
    return out


def pool(pairs: Iterable[tuple[int, int]], include_named: bool = True,
         max_size: int | None = None, filter: str | None = None) -> list[CatalogEntry]:
    """Named fixtures followed by the enumerations for each ``(r, n)``."""
    keep = _filter(filter)
    out = [e for e in named_entries(max_size) if keep(e.matroid)] if include_named else []
    for r, n in pairs:
        out.extend(entries(r, n, filter))
    return out


def small_pairs(max_rank: int, max_size: int) -> list[tuple[int, int]]:
    """Every ``(r, n)`` with ``2 <= r <= max_rank`` and ``r < n <= min(max_size, 2^r - 1)``."""
    return [(r, n) for r in range(2, max_rank + 1)
            for n in range(r + 1, min(max_size, 2 ** r - 1) + 1)]


def direct_sums(parts: list[CatalogEntry], counts=(2, 3), max_size: int = 10) -> Iterator[CatalogEntry]:
    """Direct sums of 2 or 3 entries (with repetition) of total size <= ``max_size``."""
    for c in counts:
        for combo in itertools.combinations_with_replacement(range(len(parts)), c):
            chosen = [parts[i] for i in combo]
            if sum(len(e.matroid) for e in chosen) > max_size:
                continue
            m = direct_sum(*(e.matroid for e in chosen))
            yield CatalogEntry("+".join(e.name for e in chosen), m, frozenset({"direct-sum"}))
