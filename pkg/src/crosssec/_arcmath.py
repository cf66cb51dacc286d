"""Scalar closed forms for the center channel, shared by geometry and solver.

All three quantities are functions of the center arc length ``s`` (mm),
the constraining-strip width ``l`` (mm) and the arc angle ``theta`` (rad).
"""

import math

SERIES_CUTOFF = 1e-4


def center_area(arc_length: float, strip_width: float, arc_angle: float) -> float:
    """Enclosed area of the center channel (mm^2).

    Two mirror arcs of length ``arc_length`` subtending ``arc_angle``,
    joined by two straight segments of length ``strip_width``:

        area = s^2 (theta - sin theta) / theta^2 + 2 s l sin(theta/2) / theta

    Below ``SERIES_CUTOFF`` rad both theta^-2 factors are evaluated by
    series to dodge catastrophic cancellation in ``theta - sin theta``.

    Raises:
        ValueError: outside the domain (s <= 0, l < 0, theta outside
            (0, 2*pi), or non-finite input).
    """
    s, l, theta = arc_length, strip_width, arc_angle
    if not (math.isfinite(s) and math.isfinite(l) and math.isfinite(theta)):
        raise ValueError("arguments must be finite")
    if s <= 0.0:
        raise ValueError(f"arc_length must be positive, got {s!r}")
    if l < 0.0:
        raise ValueError(f"strip_width must be non-negative, got {l!r}")
    if not 0.0 < theta < 2.0 * math.pi:
        raise ValueError(f"arc_angle must lie in (0, 2*pi), got {theta!r}")
    if theta < SERIES_CUTOFF:
        base = theta / 6.0 - theta**3 / 120.0 + theta**5 / 5040.0
        chord = 0.5 - theta * theta / 48.0 + theta**4 / 3840.0
    else:
        base = (theta - math.sin(theta)) / (theta * theta)
        chord = math.sin(0.5 * theta) / theta
    return s * s * base + 2.0 * s * l * chord


def center_area_derivative(arc_length: float, strip_width: float,
                           arc_angle: float) -> float:
    """d(center_area)/d(arc_angle) at fixed arc length and strip width.

    Factored form, zero exactly where either factor vanishes:

        (2 s / theta^2) * (2 sin(theta/2) - theta cos(theta/2))
                        * (s cos(theta/2) / theta - l / 2)

    The middle factor is positive everywhere on (0, 2*pi), so the sign is
    carried entirely by the last factor; its root is the area maximizer.
    """
    s, l, theta = arc_length, strip_width, arc_angle
    if not (math.isfinite(s) and math.isfinite(l) and math.isfinite(theta)):
        raise ValueError("arguments must be finite")
    if s <= 0.0:
        raise ValueError(f"arc_length must be positive, got {s!r}")
    if l < 0.0:
        raise ValueError(f"strip_width must be non-negative, got {l!r}")
    if not 0.0 < theta < 2.0 * math.pi:
        raise ValueError(f"arc_angle must lie in (0, 2*pi), got {theta!r}")
    half = 0.5 * theta
    return (2.0 * s / (theta * theta)
            * (2.0 * math.sin(half) - theta * math.cos(half))
            * (s * math.cos(half) / theta - 0.5 * l))


def strip_fit_residual(arc_length: float, strip_width: float,
                       arc_angle: float) -> float:
    """Residual of the strip-fit condition for the center arcs.

    ``arc_length * cos(theta/2) / theta - strip_width / 2``.  Its root is
    the angle at which the two center arcs sit exactly one strip width
    apart (their chord planes are separated by ``2 r cos(theta/2)``), and
    it is simultaneously the last factor of ``center_area_derivative``:
    the strip-fitting angle maximizes the center area.  Strictly
    decreasing on (0, pi], so the root there is unique.
    """
    return (arc_length * math.cos(0.5 * arc_angle) / arc_angle
            - 0.5 * strip_width)
