"""Backend selection for the coset kernels.

The compiled extension is used when it imports and the modulus is small
enough for 64-bit arithmetic; otherwise calls fall through to the
pure-Python implementation. Set ``BCH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

_INT64_MAX = 2**63 - 1

try:
    if os.environ.get("BCH_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced by BCH_PURE_PYTHON")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _impl(n, q):
    if _ckernels is not None and n * q <= _INT64_MAX:
        return _ckernels
    return _pykernels


def orbit_min_size(a, n, q):
    return _impl(n, q).orbit_min_size(a, n, q)


def is_leader(a, n, q):
    return _impl(n, q).is_leader(a, n, q)


def leader_table(n, q):
    # a table of n entries is only feasible far below the int64 limit
    return _impl(n, q).leader_table(n, q)


def union_count(start, count, n, q):
    return _impl(n, q).union_count(start, count, n, q)


def next_leader(start, n, q):
    return _impl(n, q).next_leader(start, n, q)
