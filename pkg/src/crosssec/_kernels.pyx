# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernel: streaming argmax of the center-channel area function.

Scans the area of the center channel (arc length ``s``, strip width ``l``)
over a uniform grid of arc angles without allocating the grid.  Must stay
arithmetically identical to ``crosssec._kernels_py`` so either backend can
serve the brute-force oracle; ties keep the smallest angle.
"""

from libc.math cimport sin


cdef inline double _area(double s, double l, double theta) nogil:
    # Area = s^2 (theta - sin theta)/theta^2 + 2 s l sin(theta/2)/theta.
    # Below 1e-4 rad the difference term cancels catastrophically; switch
    # to the series expansions of both theta^-2 factors.
    cdef double base, chord
    if theta < 1e-4:
        base = theta / 6.0 - theta * theta * theta / 120.0 \
            + theta * theta * theta * theta * theta / 5040.0
        chord = 0.5 - theta * theta / 48.0 \
            + theta * theta * theta * theta / 3840.0
    else:
        base = (theta - sin(theta)) / (theta * theta)
        chord = sin(0.5 * theta) / theta
    return s * s * base + 2.0 * s * l * chord


def center_area_grid_argmax(double arc_length, double strip_width,
                            Py_ssize_t n, double lo, double hi):
    """Return ``(index, angle, area)`` of the grid maximum.

    The grid is ``lo + i * (hi - lo) / (n - 1)`` for ``i`` in ``range(n)``;
    strict ``>`` comparison keeps the first (smallest-angle) maximum.
    """
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    cdef double step = (hi - lo) / (n - 1)
    cdef double best = -1.0
    cdef double a, theta
    cdef Py_ssize_t i, best_i = 0
    with nogil:
        for i in range(n):
            theta = lo + step * i
            a = _area(arc_length, strip_width, theta)
            if a > best:
                best = a
                best_i = i
    return best_i, lo + step * best_i, best
