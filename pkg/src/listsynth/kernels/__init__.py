"""Kernel backend selection.

The interpreter and edit-distance kernels exist twice: a numba @njit build
and a plain-Python fallback on the same buffer contract.  LISTSYNTH_BACKEND
picks one ("numba" or "numpy"); unset means numba when importable, fallback
otherwise.
"""

import os

from listsynth.kernels import numpy_backend

_ENV_VAR = "LISTSYNTH_BACKEND"

_requested = os.environ.get(_ENV_VAR, "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"{_ENV_VAR}={_requested!r} is not a backend; use 'numba' or 'numpy'")

if _requested == "numpy":
    active = numpy_backend
else:
    try:
        from listsynth.kernels import numba_backend
        active = numba_backend
    except ImportError:
        if _requested == "numba":
            raise
        active = numpy_backend

run_batch = active.run_batch
levenshtein = active.levenshtein


def backend_name():
    return active.NAME
