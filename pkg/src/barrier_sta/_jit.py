"""Optional numba acceleration.

The inner simulation loop covers ~3 million steps per run at the default
step size, so the step kernels are JIT-compiled when numba is available.
Without numba the same functions run as plain Python (slow but identical
semantics): ``njit`` degrades to an identity decorator and ``plain``
returns the undecorated function.
"""
from __future__ import annotations

try:
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if args and callable(args[0]) and not kwargs:
            return args[0]

        def decorate(fn):
            return fn

        return decorate


def plain(fn):
    """The pure-Python callable behind a jitted function (or the function itself)."""
    return getattr(fn, "py_func", fn)
