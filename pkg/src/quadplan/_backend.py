"""Kernel backend selection.

Hot numeric kernels are compiled with numba by default. Setting the
environment variable ``QUADPLAN_BACKEND=numpy`` before import disables JIT
compilation: the same kernel code then runs as plain Python loops and the
reward-map builder switches to its vectorized numpy path. ``QUADPLAN_BACKEND``
accepts ``auto`` (default), ``numba`` or ``numpy``.
"""

import os

_requested = os.environ.get("QUADPLAN_BACKEND", "auto").strip().lower()

if _requested in ("", "auto"):
    try:
        import numba  # noqa: F401
        BACKEND = "numba"
    except ImportError:
        BACKEND = "numpy"
elif _requested == "numba":
    import numba  # noqa: F401  # raise early if unavailable
    BACKEND = "numba"
elif _requested == "numpy":
    BACKEND = "numpy"
else:
    raise RuntimeError(
        f"QUADPLAN_BACKEND={_requested!r} not understood (use auto, numba or numpy)"
    )

USE_NUMBA = BACKEND == "numba"

if USE_NUMBA:
    from numba import njit
else:
    def njit(*args, **kwargs):
        """Identity decorator standing in for numba.njit."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
