"""Gamma-extension, splitting and parallel extension of binary matroids."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DependentError, EmptyError, LabelError
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid, element_set, sort_labels


@dataclass(frozen=True)
class GammaExtension:
    """The extension matroid together with the matrix it was built from.

    ``matrix`` is the representation exactly as constructed: the base
    representation, one duplicated column per element of ``x`` and the
    indicator row of the new elements.  ``result`` re-reduces it.
    """

    base: BinaryMatroid
    result: BinaryMatroid
    matrix: Gf2Matrix
    labels: tuple[str, ...]
    x: tuple[str, ...]
    gamma: tuple[str, ...]
    pairing: Mapping[str, str] = field(repr=False)

    @property
    def gamma_set(self) -> frozenset:
        return frozenset(self.gamma)

    def gamma_of(self, xs: Iterable[str]) -> frozenset:
        return frozenset(self.pairing[x] for x in xs)

    def x_of(self, gammas: Iterable[str]) -> frozenset:
        back = {g: x for x, g in self.pairing.items()}
        return frozenset(back[g] for g in gammas)


def _prepare(m: BinaryMatroid, x: Iterable[str], gamma_names: Sequence[str] | None):
    xs = element_set(x)
    if not xs:
        raise EmptyError("X must be non-empty")
    m.mask(xs)  # unknown labels
    if not m.is_independent(xs):
        raise DependentError(f"{{{', '.join(sort_labels(xs))}}} is dependent")
    ordered = sort_labels(xs)
    if gamma_names is None:
        gammas = [f"g{e}" for e in ordered]
    else:
        gammas = [str(g) for g in gamma_names]
        if len(gammas) != len(ordered):
            raise LabelError(f"{len(gammas)} new labels for {len(ordered)} elements")
    clash = set(gammas) & m.ground_set
    if clash or len(set(gammas)) != len(gammas):
        raise LabelError(f"new labels collide: {', '.join(sort_labels(clash or gammas))}")
    return ordered, gammas


def _duplicate(m: BinaryMatroid, ordered: Sequence[str]) -> Gf2Matrix:
    idx = [m.labels.index(e) for e in ordered]
    return m.rep.hstack(m.rep.select_columns(idx))


def gamma_extension(m: BinaryMatroid, x: Iterable[str],
                    gamma_names: Sequence[str] | None = None) -> GammaExtension:
    """Extend ``m`` by one new element per element of the independent set ``x``.

    New labels default to ``g<label>`` and follow ``x`` in natural label
    order.  With ``|x| = 1`` the single new element is a coloop, so that
    result is built without the coloop check.
    """
    ordered, gammas = _prepare(m, x, gamma_names)
    n = len(m)
    widened = _duplicate(m, ordered)
    indicator = ((1 << len(gammas)) - 1) << n
    matrix = widened.append_row(indicator)
    labels = m.labels + tuple(gammas)
    result = BinaryMatroid(matrix, labels, strict=m.strict and len(gammas) > 1)
    return GammaExtension(
        base=m,
        result=result,
        matrix=matrix,
        labels=labels,
        x=tuple(ordered),
        gamma=tuple(gammas),
        pairing=MappingProxyType(dict(zip(ordered, gammas))),
    )


def parallel_extension(m: BinaryMatroid, x: Iterable[str],
                       gamma_names: Sequence[str] | None = None) -> BinaryMatroid:
    ordered, gammas = _prepare(m, x, gamma_names)
    return BinaryMatroid(_duplicate(m, ordered), m.labels + tuple(gammas), strict=False)


def splitting(m: BinaryMatroid, y: Iterable[str]) -> BinaryMatroid:
    """Append a row that is one exactly on the columns of ``y``.

    The result is not checked for loops or coloops.
    """
    ys = element_set(y)
    if not ys:
        raise EmptyError("Y must be non-empty")
    row = m.mask(ys)
    return BinaryMatroid(m.rep.append_row(row), m.labels, strict=False)


def compose_check(m: BinaryMatroid, x: Iterable[str]) -> bool:
    """Splitting the parallel copies reproduces the gamma-extension."""
    ext = gamma_extension(m, x)
    via_split = splitting(parallel_extension(m, x), ext.gamma)
    return via_split.equals(ext.result)
