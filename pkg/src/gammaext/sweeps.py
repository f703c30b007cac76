"""Catalog sweeps: which (matroid, X, k) instances each law is run on.

Work is split per catalog entry and can be spread over processes with
``jobs > 1``; the returned reports are always sorted by instance key, so the
output does not depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import catalog, laws
from .catalog import CatalogEntry
from .connectivity import is_k_connected
from .reports import LawReport

DEFAULT_MAX_RANK = 4
EXTENSION_MAX_SIZE = 8
THEOREM_MAX_SIZE = 10


def extension_pool(max_rank: int = DEFAULT_MAX_RANK, max_size: int = EXTENSION_MAX_SIZE,
                   filter: str | None = None) -> list[CatalogEntry]:
    """Named fixtures plus every enumerated matroid with ``r <= max_rank``, ``n <= max_size``."""
    return catalog.pool(catalog.small_pairs(max_rank, max_size), max_size=max_size, filter=filter)


def theorem_pool(max_rank: int = DEFAULT_MAX_RANK, enum_max_size: int = EXTENSION_MAX_SIZE,
                 named_max_size: int = THEOREM_MAX_SIZE) -> list[CatalogEntry]:
    """Enumerated matroids up to ``enum_max_size`` plus named fixtures up to ``named_max_size``."""
    out = catalog.named_entries(named_max_size)
    for r, n in catalog.small_pairs(max_rank, enum_max_size):
        out.extend(catalog.entries(r, n))
    return out


def component_parts(max_rank: int = 3, max_size: int = 7) -> list[CatalogEntry]:
    return extension_pool(max_rank, max_size, filter="connected")


def sum_pool(parts: Sequence[CatalogEntry] | None = None, max_size: int = THEOREM_MAX_SIZE) -> list[CatalogEntry]:
    parts = component_parts() if parts is None else list(parts)
    return list(catalog.direct_sums(parts, (2, 3), max_size))


# -- per-entry workers (module level so they pickle) ------------------------

def _extension_law(check, max_x, min_x=1, total_limit=None):
    def run(entry: CatalogEntry) -> list[LawReport]:
        m = entry.matroid
        top = max_x if total_limit is None else min(max_x, total_limit - len(m))
        return [check(m, x, entry.name) for x in laws.independent_subsets(m, top, min_x)]
    return run


@dataclass(frozen=True)
class _Job:
    law: str
    args: tuple

    def __call__(self, entry: CatalogEntry) -> list[LawReport]:
        return _WORKERS[self.law](entry, *self.args)


def _w_rank(entry, max_x, total_limit):
    return _extension_law(laws.verify_rank_lemma, max_x, total_limit=total_limit)(entry)


def _w_circuits(entry, max_x):
    return _extension_law(laws.verify_circuit_characterization, max_x)(entry)


def _w_composition(entry, max_x):
    return _extension_law(laws.verify_composition, max_x)(entry)


def _w_deletion(entry, max_x):
    return _extension_law(laws.verify_delete_gamma, max_x)(entry)


def _w_not_five(entry, max_x):
    return _extension_law(laws.verify_never_five_connected, max_x, min_x=2)(entry)


def _w_kconn(entry, ks, max_size):
    m = entry.matroid
    out = []
    for k in ks:
        if not 2 * (k - 1) <= len(m) <= max_size:
            continue
        if not is_k_connected(m, k):
            out.append(laws.verify_k_connectivity(m, next(laws.independent_subsets(m, 1)), k, entry.name))
            continue
        for x in laws.independent_subsets(m, k + 1):
            out.append(laws.verify_k_connectivity(m, x, k, entry.name))
    return out


def _w_components(entry, max_x):
    return _extension_law(laws.verify_component_merge, max_x)(entry)


def _w_girth(entry, ks):
    return [laws.verify_girth_bound(entry.matroid, k, entry.name) for k in ks]


def _w_cocircuit(entry):
    return [laws.verify_cocircuit_lemma(entry.matroid, entry.name)]


def _w_spanning(entry, ks):
    return [laws.verify_small_deletion_spans(entry.matroid, k, entry.name) for k in ks]


_WORKERS: dict[str, Callable] = {
    "rank": _w_rank,
    "circuits": _w_circuits,
    "composition": _w_composition,
    "deletion": _w_deletion,
    "not-five": _w_not_five,
    "k-connectivity": _w_kconn,
    "components": _w_components,
    "girth": _w_girth,
    "cocircuit": _w_cocircuit,
    "spanning": _w_spanning,
}


def _default_jobs() -> int:
    return int(os.environ.get("GAMMAEXT_JOBS", "1"))


def run(law: str, entries: Sequence[CatalogEntry], *args, jobs: int | None = None) -> list[LawReport]:
    job = _Job(law, args)
    jobs = _default_jobs() if jobs is None else jobs
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(job, entries, chunksize=max(1, len(entries) // (8 * jobs))))
    else:
        chunks = [job(e) for e in entries]
    return sorted((r for chunk in chunks for r in chunk), key=lambda r: r.instance)


# -- named sweeps used by the CLI and the acceptance suite -------------------

def rank_lemma(entries, max_x: int = 4, total_limit: int = laws.RANK_EXHAUSTIVE_LIMIT, **kw):
    return run("rank", entries, max_x, total_limit, **kw)


def circuit_characterization(entries, max_x: int = 3, **kw):
    return run("circuits", entries, max_x, **kw)


def composition(entries, max_x: int = 3, **kw):
    return run("composition", entries, max_x, **kw)


def delete_gamma(entries, max_x: int = 3, **kw):
    return run("deletion", entries, max_x, **kw)


def never_five_connected(entries, max_x: int = 3, **kw):
    return run("not-five", entries, max_x, **kw)


def k_connectivity(entries, ks=(2, 3, 4), max_size: int = THEOREM_MAX_SIZE, **kw):
    return run("k-connectivity", entries, tuple(ks), max_size, **kw)


def component_merge(entries, max_x: int = 4, **kw):
    return run("components", entries, max_x, **kw)


def girth_bound(entries, ks=(2, 3, 4), **kw):
    return run("girth", entries, tuple(ks), **kw)


def cocircuit_lemma(entries, **kw):
    return run("cocircuit", entries, **kw)


def small_deletion_spans(entries, ks=(2, 3, 4), **kw):
    return run("spanning", entries, tuple(ks), **kw)
