"""Numba detection and the switch between compiled and pure-numpy kernels.

Set ``FFDIGITS_NO_NUMBA=1`` to force the numpy fallback even when numba is
installed. The flag is read once, at import time.
"""

import os

_disabled = os.environ.get("FFDIGITS_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _disabled:
        raise ImportError("numba disabled by FFDIGITS_NO_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


def backend_name():
    return "numba" if NUMBA_ENABLED else "numpy"
