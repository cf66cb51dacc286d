"""Planar polygon and circular-arc sampling primitives.

Coordinates are millimetres in the cross-section plane: x across the
width, y up, origin at the section center.
"""

from __future__ import annotations

import math

import numpy as np


def arc_points(cx: float, cy: float, radius: float, start_angle: float,
               end_angle: float, max_sagitta: float) -> np.ndarray:
    """Sample a circular arc as a chain of chords.

    Segment count is chosen so no chord's sagitta exceeds ``max_sagitta``
    (mm), with a floor of one segment per 60 degrees of span so coarse
    tolerances cannot degenerate long arcs.  Angles are radians; the arc
    runs from ``start_angle`` to ``end_angle`` (increasing = CCW).

    Returns:
        ``(n + 1, 2)`` array of points including both endpoints.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    if max_sagitta <= 0.0:
        raise ValueError(f"max_sagitta must be positive, got {max_sagitta!r}")
    span = abs(end_angle - start_angle)
    if max_sagitta < radius:
        # sagitta of a chord over angle d is r (1 - cos(d/2))
        d_max = 2.0 * math.acos(1.0 - max_sagitta / radius)
    else:
        d_max = math.pi
    n = max(1, math.ceil(span / d_max), math.ceil(span / (math.pi / 3.0)))
    t = np.linspace(start_angle, end_angle, n + 1)
    return np.column_stack((cx + radius * np.cos(t), cy + radius * np.sin(t)))


class Polygon:
    """Simple closed polygon; the closing edge is implicit.

    A trailing vertex identical to the first is dropped on construction.
    Vertices are stored as a read-only ``(n, 2)`` float array.
    """

    def __init__(self, points):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must be an (n, 2) array of x, y")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polygon vertices must be finite")
        if len(pts) >= 2 and pts[0, 0] == pts[-1, 0] and pts[0, 1] == pts[-1, 1]:
            pts = pts[:-1]
        if len(pts) < 3:
            raise ValueError("polygon needs at least 3 distinct vertices")
        pts = np.array(pts)
        pts.flags.writeable = False
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def signed_area(self) -> float:
        """Shoelace area (mm^2); positive for counter-clockwise winding."""
        x = self.points[:, 0]
        y = self.points[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def area(self) -> float:
        """Absolute enclosed area (mm^2)."""
        return abs(self.signed_area())

    def is_simple(self) -> bool:
        """True when no two edges properly cross.

        Edges that merely touch at a point (shared endpoints, tangent
        pinches) do not count as crossings; the test uses strict
        orientation signs.  O(n^2) pairwise, evaluated in bounded-memory
        blocks.
        """
        pts = self.points
        n = len(pts)
        a = pts
        b = np.roll(pts, -1, axis=0)

        def cross(o, p, q):
            return ((p[..., 0] - o[..., 0]) * (q[..., 1] - o[..., 1])
                    - (p[..., 1] - o[..., 1]) * (q[..., 0] - o[..., 0]))

        block = 256
        for i0 in range(0, n, block):
            i1 = min(i0 + block, n)
            ai = a[i0:i1, None, :]
            bi = b[i0:i1, None, :]
            d1 = cross(ai, bi, a[None, :, :])
            d2 = cross(ai, bi, b[None, :, :])
            d3 = cross(a[None, :, :], b[None, :, :], ai)
            d4 = cross(a[None, :, :], b[None, :, :], bi)
            hit = (d1 * d2 < 0.0) & (d3 * d4 < 0.0)
            if np.any(hit):
                return False
        return True
