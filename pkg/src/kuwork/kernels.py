"""Scan kernels with a compiled backend and a pure-Python fallback.

The compiled extension ``_kernels`` is used when it imports; otherwise, or
when ``KUWORK_PURE_PYTHON`` is set to a non-empty value, ``_purekernels`` is
used.  Both expose identical functions and return identical witnesses.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _purekernels
from ._purekernels import LEFT, PLAIN, RIGHT, TWO_SIDED

__all__ = [
    "BACKEND",
    "LEFT",
    "PLAIN",
    "RIGHT",
    "TWO_SIDED",
    "backends",
    "derivation_witness",
    "ideal_witness",
    "ku_witnesses",
    "search_tables",
]


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()
_impl = _purekernels if (_compiled is None or os.environ.get("KUWORK_PURE_PYTHON")) else _compiled

BACKEND = "pure" if _impl is _purekernels else "compiled"

ku_witnesses = _impl.ku_witnesses
derivation_witness = _impl.derivation_witness
ideal_witness = _impl.ideal_witness
search_tables = _impl.search_tables


def backends() -> dict[str, ModuleType]:
    """Every importable backend by name, for cross-checking and benchmarks."""
    found = {"pure": _purekernels}
    if _compiled is not None:
        found["compiled"] = _compiled
    return found
