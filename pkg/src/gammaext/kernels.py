"""Backend selection for the subset kernels.

The compiled ``_kernels`` module is used when it imports and the inputs fit
in a machine word; otherwise the numpy versions in ``_pykernels`` run.  Set
``GAMMAEXT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_compiled = None
if not os.environ.get("GAMMAEXT_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_WORD = 63


def _fits(values, n_bits=0):
    return n_bits <= _WORD and all(0 <= v < (1 << _WORD) for v in values)


def _pick(values, n_bits=0):
    if _compiled is not None and _fits(values, n_bits):
        return _compiled
    return _pykernels


def column_rank(cols) -> int:
    cols = [int(c) for c in cols]
    return _pick(cols).column_rank(cols)


def rank_table(cols):
    cols = [int(c) for c in cols]
    return _pick(cols, len(cols)).rank_table(cols)


def least_separation(ranks, n: int, r: int, j: int) -> int:
    mod = _compiled if _compiled is not None and n <= _WORD else _pykernels
    return int(mod.least_separation(ranks, n, r, j))


def minimal_supports(basis) -> list[int]:
    basis = [int(b) for b in basis]
    return _pick(basis, len(basis)).minimal_supports(basis)


def backends():
    """Modules available for side-by-side comparison (tests, benchmarks)."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
