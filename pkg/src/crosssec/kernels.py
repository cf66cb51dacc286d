"""Import-time backend selection for the grid-scan kernel.

Prefers the compiled ``crosssec._kernels`` extension and falls back to the
NumPy implementation when the extension is missing.  Set
``CROSSSEC_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and the backend-agreement tests).  Both backends are single threaded, so
any cap requested via ``CROSSSEC_THREADS`` is honored trivially and never
changes results.
"""

import os

if os.environ.get("CROSSSEC_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl

    COMPILED = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        COMPILED = False

center_area_grid_argmax = _impl.center_area_grid_argmax

__all__ = ["COMPILED", "center_area_grid_argmax"]
