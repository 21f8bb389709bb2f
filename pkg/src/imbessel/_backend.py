"""Kernel backend selection.

The compiled extension `_kernels_cy` is preferred; the pure-Python twin
`_kernels_py` is the fallback.  Set IMBESSEL_PURE_PYTHON=1 to force the
fallback (used by the benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("IMBESSEL_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels


def backend_name() -> str:
    return kernels.BACKEND
