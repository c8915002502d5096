"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``STACKLAB_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementations are used.
"""

import os

from . import _pykernels

BACKEND = "python"

if not os.environ.get("STACKLAB_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

prom_table = _impl.prom_table
crossing_nesting = _impl.crossing_nesting

__all__ = ["BACKEND", "prom_table", "crossing_nesting"]
