"""Optional numba acceleration.

``HAMMING_KFREE_BACKEND=numpy`` forces the pure-numpy kernels even when numba
is importable; any other value (or unset) uses numba when available.
``HAMMING_KFREE_THREADS`` caps the numba worker pool.
"""

import os

BACKEND_ENV = "HAMMING_KFREE_BACKEND"
THREADS_ENV = "HAMMING_KFREE_THREADS"

try:
    import numba

    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the system TBB is too old for numba; avoid the probe and its warning
        numba.config.THREADING_LAYER = "workqueue"
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False


def _dummy_jit(*args, **kwargs):
    def wrapper(f):
        return f

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return wrapper


if HAVE_NUMBA:
    njit = numba.njit
    prange = numba.prange
else:  # pragma: no cover
    njit = _dummy_jit
    prange = range


def default_backend():
    if os.environ.get(BACKEND_ENV, "").strip().lower() == "numpy":
        return "numpy"
    return "numba" if HAVE_NUMBA else "numpy"


def apply_thread_cap():
    raw = os.environ.get(THREADS_ENV)
    if not raw or not HAVE_NUMBA:
        return
    try:
        cap = int(raw)
    except ValueError:
        return
    if cap >= 1:
        numba.set_num_threads(min(cap, numba.config.NUMBA_NUM_THREADS))
