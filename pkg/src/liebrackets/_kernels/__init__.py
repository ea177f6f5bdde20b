"""Hot exact-arithmetic kernels with a compiled core and a pure fallback.

``fast`` (Cython) is preferred when it compiled; set ``LIEBRACKETS_PURE=1``
to force the pure-Python reference implementation.  ``BACKEND`` records the
active choice so callers and benchmarks can report it.
"""

import os

from . import pure

if os.environ.get("LIEBRACKETS_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import fast as _impl

        BACKEND = "fast"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

rref = _impl.rref
mat_mul = _impl.mat_mul
trace_mul = _impl.trace_mul
charpoly_int = _impl.charpoly_int
power_is_zero = _impl.power_is_zero

__all__ = ["BACKEND", "charpoly_int", "mat_mul", "power_is_zero", "pure", "rref", "trace_mul"]
