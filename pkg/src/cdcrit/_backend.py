"""Select the kernel implementation at import time.

The compiled extension is preferred; ``CDCRIT_PURE=1`` forces the
pure-Python kernels. Graphs wider than the compiled word size always use
the pure-Python path.
"""

from __future__ import annotations

import os

from cdcrit import _kernels_py

try:
    if os.environ.get("CDCRIT_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from cdcrit import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

COMPILED_MAX_N = 64
COMPILED_MAX_HP_N = 32


def _pick(n: int, cap: int = COMPILED_MAX_N):
    if _compiled is not None and n <= cap:
        return _compiled
    return _kernels_py


def cds_search(adj, n, size, connected, find_all, hit_mask=0, limit=0):
    return _pick(n).cds_search(list(adj), n, size, connected, find_all, hit_mask, limit)


def hamiltonian_path(adj, n):
    return _pick(n, COMPILED_MAX_HP_N).hamiltonian_path(list(adj), n)


def mask_is_connected(adj, mask):
    return _pick(len(adj)).mask_is_connected(list(adj), mask)


def count_components(adj, alive):
    return _pick(len(adj)).count_components(list(adj), alive)
