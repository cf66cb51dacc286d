"""NumPy fallback for the grid-scan kernel.

Same grid definition and same series-safe arithmetic as the compiled
``crosssec._kernels``, evaluated vectorized.  ``numpy.argmax`` keeps the
first maximum, matching the compiled kernel's smallest-angle tie break.
"""

import numpy as np

SERIES_CUTOFF = 1e-4


def _area_grid(arc_length, strip_width, theta):
    base = np.empty_like(theta)
    chord = np.empty_like(theta)
    small = theta < SERIES_CUTOFF
    t = theta[small]
    base[small] = t / 6.0 - t**3 / 120.0 + t**5 / 5040.0
    chord[small] = 0.5 - t * t / 48.0 + t**4 / 3840.0
    t = theta[~small]
    base[~small] = (t - np.sin(t)) / (t * t)
    chord[~small] = np.sin(0.5 * t) / t
    return arc_length * arc_length * base + 2.0 * arc_length * strip_width * chord


def center_area_grid_argmax(arc_length, strip_width, n, lo, hi):
    """Return ``(index, angle, area)`` of the grid maximum."""
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    step = (hi - lo) / (n - 1)
    theta = lo + step * np.arange(n)
    area = _area_grid(arc_length, strip_width, theta)
    i = int(np.argmax(area))
    return i, lo + step * i, float(area[i])
