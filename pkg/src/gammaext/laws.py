"""Executable checks of the structural facts about gamma-extensions.

Each ``verify_*`` function returns a :class:`LawReport`.  A report that
fails carries a counterexample that can be re-checked with the base
operations; a report whose hypotheses do not hold is ``precondition-unmet``,
never ``pass``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator

import numpy as np

from .connectivity import connectivity_witness, girth_bound_check, is_k_connected
from .extensions import GammaExtension, compose_check, gamma_extension
from .kernels import column_rank
from .matroid import BinaryMatroid, element_set, sort_family, sort_labels
from .reports import FAIL, PASS, UNMET, LawReport

RANK_EXHAUSTIVE_LIMIT = 12
RANK_SAMPLES = 4096
RANK_SEED = 20240229

RANK_LEMMA = "rank-lemma"
CIRCUITS = "circuit-characterization"
K_CONNECTIVITY = "k-connectivity-preservation"
COMPONENTS = "component-merge"
GIRTH = "girth-bound"
COCIRCUIT = "cocircuit-lemma"
SPANNING = "small-deletion-spans"
NOT_FIVE = "never-5-connected"
COMPOSITION = "split-composition"
DELETION = "delete-gamma"


def _fmt(s: Iterable[str]) -> str:
    return ",".join(sort_labels(s))


def instance_key(name: str, x: Iterable[str] | None = None, k: int | None = None) -> str:
    parts = [name]
    if x is not None:
        parts.append(f"X={_fmt(x)}")
    if k is not None:
        parts.append(f"k={k}")
    return " ".join(parts)


def _lists(family) -> list[list[str]]:
    return [sort_labels(s) for s in sort_family(family)]


def independent_subsets(m: BinaryMatroid, max_size: int, min_size: int = 1) -> Iterator[frozenset]:
    """Independent sets by increasing size, each size in label order."""
    labels = sort_labels(m.labels)
    table = m.rank_table() if len(m) <= 20 else None
    for size in range(min_size, min(max_size, m.rank) + 1):
        for combo in itertools.combinations(labels, size):
            if table is not None:
                if table[m.mask(combo)] == size:
                    yield frozenset(combo)
            elif m.is_independent(combo):
                yield frozenset(combo)


def _x_problem(m: BinaryMatroid, x) -> str | None:
    x = element_set(x)
    if not x:
        return "X is empty"
    if not x <= m.ground_set:
        return "X is not a subset of the ground set"
    if not m.is_independent(x):
        return "X is dependent"
    return None


# -- circuit characterization --------------------------------------------

def predicted_circuit_families(m: BinaryMatroid, g: GammaExtension) -> dict[str, list[frozenset]]:
    """The three families: circuits of ``m``; ``{x_i, x_j, g_i, g_j}``;
    ``J | (D - X_J)`` for even ``J`` of size >= 2 and circuits ``D`` containing ``X_J``.
    """
    base = list(m.circuits())
    pairs = [frozenset({a, b, g.pairing[a], g.pairing[b]})
             for a, b in itertools.combinations(g.x, 2)]
    third = set()
    for size in range(2, len(g.gamma) + 1, 2):
        for j in itertools.combinations(g.gamma, size):
            xj = g.x_of(j)
            for d in base:
                if xj <= d:
                    third.add(frozenset(j) | (d - xj))
    return {"circuits": sort_family(base), "pairs": sort_family(pairs), "even": sort_family(third)}


def predicted_circuits(m: BinaryMatroid, g: GammaExtension) -> list[frozenset]:
    fams = predicted_circuit_families(m, g)
    return sort_family(set().union(*map(set, fams.values())))


def verify_circuit_characterization(m: BinaryMatroid, x, name: str = "M") -> LawReport:
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    if problem:
        return LawReport(CIRCUITS, key, UNMET, notes={"reason": problem})
    ext = gamma_extension(m, x)
    actual = set(ext.result.circuits())
    predicted = set(predicted_circuits(m, ext))
    notes = {"actual": len(actual), "predicted": len(predicted)}
    if actual == predicted:
        return LawReport(CIRCUITS, key, PASS, notes=notes)
    cex = {"missing": _lists(actual - predicted), "spurious": _lists(predicted - actual)}
    return LawReport(CIRCUITS, key, FAIL, counterexample=cex, notes=notes)


# -- rank identities -------------------------------------------------------

def _ranks(m: BinaryMatroid, masks) -> np.ndarray:
    cols = m.columns
    return np.array([column_rank(c for i, c in enumerate(cols) if int(a) >> i & 1)
                     for a in masks], dtype=np.int64)


def verify_rank_lemma(m: BinaryMatroid, x, name: str = "M", *,
                      exhaustive_limit: int = RANK_EXHAUSTIVE_LIMIT,
                      samples: int = RANK_SAMPLES, seed: int = RANK_SEED) -> LawReport:
    """Rank facts relating ``m`` and its gamma-extension ``m'``.

    (i) the new elements are independent; (ii) ``r'(A) = r(A)`` on old
    elements; (iii) ``r'(A) >= r(A & S) + 1`` when ``A`` meets the new
    elements; (iv) ``r'(m') = r(m) + 1``.  Exhaustive up to
    ``exhaustive_limit`` elements, otherwise seeded random subsets.
    """
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    if problem:
        return LawReport(RANK_LEMMA, key, UNMET, notes={"reason": problem})
    ext = gamma_extension(m, x)
    mx = ext.result
    n, total = len(m), len(mx)
    low = (1 << n) - 1
    gmask = ((1 << len(ext.gamma)) - 1) << n

    def fail(part, mask, got, want):
        return LawReport(RANK_LEMMA, key, FAIL, counterexample={
            "part": part, "subset": sort_labels(mx.subset(int(mask))),
            "rank": int(got), "expected": want})

    if mx.rank_of(ext.gamma) != len(ext.gamma):
        return fail("i", gmask, mx.rank_of(ext.gamma), f"= {len(ext.gamma)}")
    if mx.rank != m.rank + 1:
        return fail("iv", (1 << total) - 1, mx.rank, f"= {m.rank + 1}")

    if total <= exhaustive_limit:
        big = mx.rank_table().astype(np.int64)
        small = m.rank_table().astype(np.int64)
        bad = np.nonzero(big[: 1 << n] != small)[0]
        if bad.size:
            a = bad[0]
            return fail("ii", a, big[a], f"= {small[a]}")
        masks = np.arange(1 << total, dtype=np.int64)
        meet = masks[(masks & gmask) != 0]
        lhs = big[meet]
        rhs = small[meet & low] + 1
        bad = np.nonzero(lhs < rhs)[0]
        if bad.size:
            a = meet[bad[0]]
            return fail("iii", a, big[a], f">= {small[a & low] + 1}")
        return LawReport(RANK_LEMMA, key, PASS, notes={"mode": "exhaustive", "subsets": 1 << total})

    rng = np.random.default_rng(seed)
    masks = rng.integers(0, 1 << total, size=samples, dtype=np.int64)
    big = _ranks(mx, masks)
    olds = masks & low
    base = _ranks(m, olds)
    old_only = (masks & gmask) == 0
    bad = np.nonzero(old_only & (big != base))[0]
    if bad.size:
        a = masks[bad[0]]
        return fail("ii", a, big[bad[0]], f"= {base[bad[0]]}")
    bad = np.nonzero(~old_only & (big < base + 1))[0]
    if bad.size:
        a = masks[bad[0]]
        return fail("iii", a, big[bad[0]], f">= {base[bad[0]] + 1}")
    return LawReport(RANK_LEMMA, key, PASS, notes={"mode": "sampled", "seed": seed, "subsets": samples})


# -- connectivity theorems ---------------------------------------------------

def _sep_payload(sep) -> dict | None:
    if sep is None:
        return None
    a, b = sep.as_lists()
    return {"side_a": a, "side_b": b, "order": sep.order}


def verify_k_connectivity(m: BinaryMatroid, x, k: int, name: str = "M") -> LawReport:
    """For k-connected ``m`` with at least ``2(k-1)`` elements:
    ``m^X`` is k-connected exactly when ``|X| >= k`` and ``2 <= k <= 4``.
    """
    key = instance_key(name, x, k)
    problem = _x_problem(m, x)
    if k < 2:
        problem = "k < 2"
    elif problem is None and len(m) < 2 * (k - 1):
        problem = f"fewer than {2 * (k - 1)} elements"
    elif problem is None and not is_k_connected(m, k):
        problem = f"M is not {k}-connected"
    if problem:
        return LawReport(K_CONNECTIVITY, key, UNMET, notes={"reason": problem})
    x = element_set(x)
    mx = gamma_extension(m, x).result
    witness = connectivity_witness(mx, k, "paper")
    observed = witness is None
    expected = len(x) >= k and 2 <= k <= 4
    notes = {
        "observed": observed,
        "expected": expected,
        "modes_agree": (observed == is_k_connected(mx, k, "cumulative"))
        and is_k_connected(m, k, "cumulative"),
    }
    if observed == expected:
        return LawReport(K_CONNECTIVITY, key, PASS, notes=notes)
    return LawReport(K_CONNECTIVITY, key, FAIL, counterexample={
        "expected": expected, "observed": observed, "separation": _sep_payload(witness)}, notes=notes)


def verify_component_merge(m: BinaryMatroid, x, name: str = "M") -> LawReport:
    """For disconnected ``m``: ``m^X`` is connected exactly when X meets every component."""
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    blocks = m.components()
    if problem is None and len(blocks) < 2:
        problem = "M is connected"
    if problem:
        return LawReport(COMPONENTS, key, UNMET, notes={"reason": problem})
    x = element_set(x)
    mx = gamma_extension(m, x).result
    witness = connectivity_witness(mx, 2)
    observed = witness is None
    expected = all(block & x for block in blocks)
    notes = {"observed": observed, "expected": expected, "components": len(blocks)}
    if not expected:
        # components avoiding X survive unchanged
        extended = set(mx.components())
        notes["untouched_survive"] = all(b in extended for b in blocks if not b & x)
    if observed == expected:
        return LawReport(COMPONENTS, key, PASS, notes=notes)
    return LawReport(COMPONENTS, key, FAIL, counterexample={
        "expected": expected, "observed": observed,
        "components": _lists(mx.components()), "separation": _sep_payload(witness)}, notes=notes)


def verify_never_five_connected(m: BinaryMatroid, x, name: str = "M") -> LawReport:
    """With ``|X| >= 2`` the extension has a 4-element circuit, and is not
    5-connected once it has at least 8 elements."""
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    if problem is None and len(element_set(x)) < 2:
        problem = "|X| < 2"
    if problem:
        return LawReport(NOT_FIVE, key, UNMET, notes={"reason": problem})
    mx = gamma_extension(m, x).result
    fours = [c for c in mx.circuits() if len(c) == 4]
    if not fours:
        return LawReport(NOT_FIVE, key, FAIL, counterexample={"four_circuits": []})
    if len(mx) >= 8 and is_k_connected(mx, 5):
        return LawReport(NOT_FIVE, key, FAIL, counterexample={
            "five_connected": True, "four_circuit": sort_labels(fours[0])})
    return LawReport(NOT_FIVE, key, PASS, notes={"four_circuit": sort_labels(fours[0])})


# -- facts about the base matroid -------------------------------------------

def verify_girth_bound(m: BinaryMatroid, k: int, name: str = "M") -> LawReport:
    """Circuits and cocircuits of a k-connected matroid with >= 2(k-1) elements
    have at least k elements."""
    key = instance_key(name, k=k)
    if len(m) < 2 * (k - 1) or not is_k_connected(m, k):
        return LawReport(GIRTH, key, UNMET, notes={"reason": "not k-connected or too small"})
    r = girth_bound_check(m, k)
    return LawReport(GIRTH, key, r.verdict, r.counterexample, r.notes)


def verify_cocircuit_lemma(m: BinaryMatroid, name: str = "M") -> LawReport:
    """If deleting ``Y`` drops the rank by one, ``Y`` contains a cocircuit."""
    key = instance_key(name)
    n = len(m)
    full = (1 << n) - 1
    table = m.rank_table().astype(np.int64)
    ys = np.arange(1 << n, dtype=np.int64)
    ys = ys[table[full ^ ys] == m.rank - 1]
    covered = np.zeros(ys.shape, dtype=bool)
    for c in (m.mask(c) for c in m.cocircuits()):
        covered |= (ys & c) == c
    notes = {"checked": int(ys.size)}
    if ys.size == 0:
        return LawReport(COCIRCUIT, key, UNMET, notes=notes)
    bad = np.nonzero(~covered)[0]
    if bad.size:
        return LawReport(COCIRCUIT, key, FAIL,
                         counterexample={"Y": sort_labels(m.subset(int(ys[bad[0]])))}, notes=notes)
    return LawReport(COCIRCUIT, key, PASS, notes=notes)


def verify_small_deletion_spans(m: BinaryMatroid, k: int, name: str = "M") -> LawReport:
    """In a k-connected matroid with >= 2(k-1) elements, deleting fewer than k
    elements keeps the rank."""
    key = instance_key(name, k=k)
    n = len(m)
    if n < 2 * (k - 1) or not is_k_connected(m, k):
        return LawReport(SPANNING, key, UNMET, notes={"reason": "not k-connected or too small"})
    full = (1 << n) - 1
    table = m.rank_table().astype(np.int64)
    ys = np.arange(1 << n, dtype=np.int64)
    weights = np.array([int(y).bit_count() for y in ys])
    ys = ys[(weights < k) & (ys != full)]
    bad = np.nonzero(table[full ^ ys] != m.rank)[0]
    if bad.size:
        return LawReport(SPANNING, key, FAIL,
                         counterexample={"Y": sort_labels(m.subset(int(ys[bad[0]])))})
    return LawReport(SPANNING, key, PASS, notes={"checked": int(ys.size)})


# -- construction identities -------------------------------------------------

def verify_composition(m: BinaryMatroid, x, name: str = "M") -> LawReport:
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    if problem:
        return LawReport(COMPOSITION, key, UNMET, notes={"reason": problem})
    if compose_check(m, x):
        return LawReport(COMPOSITION, key, PASS)
    return LawReport(COMPOSITION, key, FAIL, counterexample={"X": sort_labels(x)})


def verify_delete_gamma(m: BinaryMatroid, x, name: str = "M") -> LawReport:
    key = instance_key(name, x)
    problem = _x_problem(m, x)
    if problem:
        return LawReport(DELETION, key, UNMET, notes={"reason": problem})
    ext = gamma_extension(m, x)
    if ext.result.delete(ext.gamma, strict=False).equals(m):
        return LawReport(DELETION, key, PASS)
    return LawReport(DELETION, key, FAIL, counterexample={"X": sort_labels(x)})


def run_sweep(check: Callable[..., LawReport], instances: Iterable[tuple]) -> list[LawReport]:
    """Apply ``check`` to each argument tuple; reports sorted by instance key."""
    reports = [check(*args) for args in instances]
    return sorted(reports, key=lambda r: r.instance)
