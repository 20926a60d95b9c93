"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``HEXARING_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from hexaring import _pykernels

if os.environ.get("HEXARING_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from hexaring import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND

pack_row = _impl.pack_row
unpack_row = _impl.unpack_row
pack_key = _impl.pack_key
unpack_key = _impl.unpack_key
rref_rows = _impl.rref_rows
permute_key = _impl.permute_key
orbit = _impl.orbit
stabilizer = _impl.stabilizer
pair_max = _impl.pair_max
is_self_orthogonal_key = _impl.is_self_orthogonal_key
enumerate_rref = _impl.enumerate_rref
double_cosets = _impl.double_cosets
perm_rank = _impl.perm_rank
perm_unrank = _impl.perm_unrank


def backends() -> dict:
    """Every importable backend module keyed by name (for tests and benchmarks)."""
    found = {"python": _pykernels}
    try:
        from hexaring import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
