"""Cross-section geometry of a strip-constrained inflated membrane tube.

Two internal strips divide the inflated tube into a center channel and two
mirror-image side channels.  Uniform pressure and uniform membrane tension
make every free patch a circular arc, so the whole section is three arc
families plus the two straight strip segments.  This module holds the
immutable record types and the closed-form relations between the duct
dimensions (center height, side height, overall width; serialized as
``H_c_mm``, ``H_s_mm``, ``w_mm``) and the fabrication parameters (arc
lengths and strip width; serialized as ``S_c_mm``, ``S_s_mm``, ``L_mm``).

Units are mm, mm^2 and radians throughout; kPa and N appear only in
:func:`membrane_curvature` and the analysis layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ._arcmath import center_area
from .errors import InfeasibleSpec, NonpositiveTension
from .polygon import Polygon, arc_points

#: Default polygonization tolerance: max chord-sagitta error in mm.
DEFAULT_ARC_RESOLUTION = 1e-4

#: Relative slack for the feasibility boundary, so specs recovered from a
#: degenerate geometry (zero strip width) survive floating-point roundoff.
_BOUNDARY_RTOL = 1e-12


def _require_positive(obj, *fields):
    for name in fields:
        value = getattr(obj, name)
        if not math.isfinite(value) or value <= 0.0:
            raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class DesignSpec:
    """Target duct dimensions of the inflated cross section.

    Attributes:
        center_height: Inflated height of the center channel, mm (``H_c_mm``).
        side_height: Inflated height of each side channel, mm (``H_s_mm``).
        width: Overall width of the section, mm (``w_mm``).

    Positivity is enforced here; feasibility of the combination is a
    separate, decidable property — see :func:`validate_spec`.
    """

    center_height: float
    side_height: float
    width: float

    def __post_init__(self):
        _require_positive(self, "center_height", "side_height", "width")


@dataclass(frozen=True)
class FabricationParams:
    """Flat-membrane quantities fixed at fabrication time.

    Attributes:
        center_arc_length: Membrane arc length over the center channel, one
            side, mm (``S_c_mm``).
        side_arc_length: Membrane arc length around one side channel, mm
            (``S_s_mm``).
        strip_width: Width of each internal constraining strip, mm
            (``L_mm``); equals the straight-segment length of the inflated
            section.  Zero is the tangent-circle degenerate case.
    """

    center_arc_length: float
    side_arc_length: float
    strip_width: float

    def __post_init__(self):
        _require_positive(self, "center_arc_length", "side_arc_length")
        if not math.isfinite(self.strip_width) or self.strip_width < 0.0:
            raise ValueError(
                f"strip_width must be non-negative and finite, got {self.strip_width!r}")

    def perimeter(self) -> float:
        """Membrane perimeter of the section: 2 S_c + 2 S_s (mm)."""
        return 2.0 * (self.center_arc_length + self.side_arc_length)


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the closed-form feasibility conditions for a spec.

    Attributes:
        feasible: True iff every condition holds.
        violations: Names of the violated conditions, drawn from
            ``"w > H_s"``, ``"gamma >= 0"``, ``"|arcsin argument| <= 1"``.
        discriminant: The feasibility discriminant (mm^4).
        arcsin_argument: Sine of the center half-arc angle implied by the
            spec (w_c / H_c); None when undefined (w <= H_s).
    """

    feasible: bool
    violations: tuple[str, ...]
    discriminant: float
    arcsin_argument: float | None


@dataclass(frozen=True)
class CenterChannel:
    """The inflated center channel: two mirror arcs plus two strip chords.

    Attributes:
        radius: Arc radius, H_c / 2 (mm).
        arc_angle: Angle subtended by each arc (rad); (0, pi] on the
            design path.
        chord_angle: Angle subtending one strip chord, pi - arc_angle (rad).
        width: Chord width of the channel, w_c = H_c sin(S_c / H_c) (mm).
        strip_width: Straight-segment length L (mm).
        area: Enclosed area between the arcs and the chords (mm^2),
            closed form.
    """

    radius: float
    arc_angle: float
    chord_angle: float
    width: float
    strip_width: float
    area: float

    def __post_init__(self):
        _require_positive(self, "radius", "arc_angle", "width")
        if not 0.0 < self.arc_angle < 2.0 * math.pi:
            raise ValueError(f"arc_angle must lie in (0, 2*pi), got {self.arc_angle!r}")

    @property
    def height(self) -> float:
        """Inflated channel height H_c = 2 r (mm)."""
        return 2.0 * self.radius

    @property
    def arc_length(self) -> float:
        """Membrane length of one arc, r * arc_angle (mm)."""
        return self.radius * self.arc_angle


@dataclass(frozen=True)
class SideChannel:
    """One inflated side channel: a single arc closed by the strip chord.

    Attributes:
        radius: Arc radius, H_s / 2 (mm).
        arc_angle: Angle subtended by the membrane arc (rad); (0, 2*pi].
        conjugate_angle: 2*pi - arc_angle (rad); subtends the virtual
            complement of the arc on the same circle.
        conjugate_arc_length: Length of that complement (mm); together with
            the membrane arc it closes the full circle pi * H_s.
        width: Width contribution of the channel,
            w_s = r (1 + cos(conjugate_angle / 2)) (mm).
        strip_width: Chord length L shared with the center channel (mm).
        center_x: Signed x of the arc center, +-(w / 2 - r) (mm).
        area: Region between arc and chord (mm^2), from the sampled
            polygon (no closed form is used on this path).
    """

    radius: float
    arc_angle: float
    conjugate_angle: float
    conjugate_arc_length: float
    width: float
    strip_width: float
    center_x: float
    area: float

    def __post_init__(self):
        _require_positive(self, "radius")
        if not 0.0 < self.arc_angle <= 2.0 * math.pi:
            raise ValueError(f"arc_angle must lie in (0, 2*pi], got {self.arc_angle!r}")

    @property
    def height(self) -> float:
        """Inflated channel height H_s = 2 r (mm)."""
        return 2.0 * self.radius

    @property
    def arc_length(self) -> float:
        """Membrane length of the arc, r * arc_angle (mm)."""
        return self.radius * self.arc_angle


@dataclass(frozen=True)
class CrossSection:
    """Full mirror-symmetric inflated section.

    Attributes:
        spec: Duct dimensions the section realizes.
        fab: Fabrication parameters it was assembled from.
        center: The center channel.
        sides: (left, right) side channels; mirror images, differing only
            in the sign of ``center_x``.
        width: Assembled overall width w_c + 2 w_s (mm); matches
            ``spec.width`` to roundoff.
    """

    spec: DesignSpec
    fab: FabricationParams
    center: CenterChannel
    sides: tuple[SideChannel, SideChannel]
    width: float

    @property
    def strip_segments(self) -> tuple[tuple[tuple[float, float], tuple[float, float]], ...]:
        """Endpoints of the two straight segments, ((x, -L/2), (x, L/2))."""
        half_w = 0.5 * self.center.width
        half_l = 0.5 * self.fab.strip_width
        return tuple(
            ((x, -half_l), (x, half_l)) for x in (-half_w, half_w)
        )

    @property
    def total_area(self) -> float:
        """Enclosed area of the whole section, center + both sides (mm^2)."""
        return self.center.area + self.sides[0].area + self.sides[1].area

    @property
    def perimeter(self) -> float:
        """Membrane perimeter, 2 S_c + 2 S_s (mm)."""
        return self.fab.perimeter()


def feasibility_discriminant(spec: DesignSpec) -> float:
    """Discriminant whose sign decides feasibility of a spec (mm^4).

    With h = center_height, s = side_height, w = width:

        gamma = 4 s (h^2 s - h^2 w - w^2 s + w^3) - (w^2 - h^2)^2

    Non-negative exactly when the duct dimensions admit a real strip
    width; scales as k^4 under uniform scaling by k.  Algebraically equal
    to ``4 h^2 (w - s)^2 - (w^2 + h^2 - 2 w s)^2``, which ties it to the
    arcsin-argument condition of :func:`validate_spec`.
    """
    h, s, w = spec.center_height, spec.side_height, spec.width
    return 4.0 * s * (h * h * s - h * h * w - w * w * s + w**3) - (w * w - h * h) ** 2


def _center_sine(spec: DesignSpec) -> float:
    # sin of the center half-arc angle implied by the spec: w_c / H_c.
    h, s, w = spec.center_height, spec.side_height, spec.width
    return (w * w + h * h - 2.0 * w * s) / (2.0 * h * (w - s))


def validate_spec(spec: DesignSpec) -> FeasibilityReport:
    """Evaluate the three feasibility conditions; reports, never throws.

    Feasible iff width > side_height, the discriminant is non-negative,
    and the implied center-arc sine lies in [-1, 1].  A relative slack of
    1e-12 is allowed at the boundary so zero-strip-width geometry survives
    roundoff.  Violated conditions are named in the report.
    """
    violations = []
    gamma = feasibility_discriminant(spec)
    h, s, w = spec.center_height, spec.side_height, spec.width
    sine = None
    if w <= s:
        violations.append("w > H_s")
    else:
        sine = _center_sine(spec)
        if abs(sine) > 1.0 + _BOUNDARY_RTOL:
            violations.append("|arcsin argument| <= 1")
    gamma_slack = _BOUNDARY_RTOL * (2.0 * h * max(w - s, 0.0)) ** 2
    if gamma < -gamma_slack:
        violations.append("gamma >= 0")
    return FeasibilityReport(
        feasible=not violations,
        violations=tuple(violations),
        discriminant=gamma,
        arcsin_argument=sine,
    )


def inverse_design(spec: DesignSpec) -> FabricationParams:
    """Closed-form fabrication parameters realizing a feasible spec.

    Solves the design direction without iteration.  The center arc is
    taken on the branch with arc angle in (0, pi] (the arc never wraps
    past a half circle); the side arc length follows from the strip-chord
    relation, choosing the short or long side arc by comparing the
    leftover width ``w - w_c`` against the side height, with ties going
    to the short branch.

    Raises:
        InfeasibleSpec: when :func:`validate_spec` fails, or when the spec
            sits outside this branch's domain (non-positive center or side
            arc length).
    """
    report = validate_spec(spec)
    if not report.feasible:
        raise InfeasibleSpec(report.violations)
    h, s, w = spec.center_height, spec.side_height, spec.width
    sine = min(1.0, max(-1.0, report.arcsin_argument))
    if sine <= 0.0:
        raise InfeasibleSpec(
            ("S_c > 0",),
            f"spec implies a non-positive center arc (arcsin argument {sine!r})")
    center_arc = h * math.asin(sine)
    # cos of the center half-arc angle; sqrt of the discriminant folded
    # into its normalized form to keep the degenerate boundary exact.
    cosine = math.sqrt(max(report.discriminant, 0.0)) / (2.0 * h * (w - s))
    strip = h * cosine
    beta = s * math.asin(min(1.0, strip / s))
    if w - h * sine <= s:
        side_arc = beta
    else:
        side_arc = math.pi * s - beta
    if side_arc <= 0.0:
        raise InfeasibleSpec(
            ("S_s > 0",),
            "spec implies vanishing side channels (width equals center width)")
    return FabricationParams(center_arc, side_arc, strip)


def membrane_curvature(pressure_kpa: float, tension_n_per_mm: float) -> float:
    """Curvature of a free membrane patch under pressure, 1/mm.

    Force balance on a membrane strip with uniform tension gives a
    constant curvature P / T; every free patch of the section is
    therefore a circular arc, which is what the channel types assume.
    With P in kPa (= 1e-3 N/mm^2) and T in N/mm:

        curvature = 1e-3 * P / T

    Raises:
        NonpositiveTension: when tension <= 0.
        ValueError: when pressure is negative or either input non-finite.
    """
    if not (math.isfinite(pressure_kpa) and math.isfinite(tension_n_per_mm)):
        raise ValueError("pressure and tension must be finite")
    if pressure_kpa < 0.0:
        raise ValueError(f"pressure must be non-negative, got {pressure_kpa!r}")
    if tension_n_per_mm <= 0.0:
        raise NonpositiveTension(
            f"tension must be positive, got {tension_n_per_mm!r}")
    return 1e-3 * pressure_kpa / tension_n_per_mm


def side_channel_polygon(side: SideChannel,
                         max_sagitta: float = DEFAULT_ARC_RESOLUTION) -> Polygon:
    """Polygonized side-channel region: sampled arc closed by the chord.

    The arc runs through the channel's outermost point; the implicit
    closing edge is the strip chord.  Counter-clockwise winding for both
    the right-hand (positive ``center_x``) and the mirrored left-hand
    channel.
    """
    half = 0.5 * side.arc_angle
    if side.center_x >= 0.0:
        start, end = -half, half
    else:
        start, end = math.pi - half, math.pi + half
    pts = arc_points(side.center_x, 0.0, side.radius, start, end, max_sagitta)
    return Polygon(pts)


def cross_section_outline(section: CrossSection,
                          max_sagitta: float = DEFAULT_ARC_RESOLUTION) -> Polygon:
    """Outer membrane outline as one counter-clockwise polygon.

    Traverses right side arc (bottom to top), top center arc, left side
    arc (top to bottom) and bottom center arc.  The straight strip
    segments are interior and not part of the outline; total enclosed
    area equals center + both side areas.
    """
    c = section.center
    s = section.sides[1]
    half_s = 0.5 * s.arc_angle
    half_c = 0.5 * c.arc_angle
    right = arc_points(s.center_x, 0.0, s.radius, -half_s, half_s, max_sagitta)
    top = arc_points(0.0, 0.0, c.radius,
                     0.5 * math.pi - half_c, 0.5 * math.pi + half_c, max_sagitta)
    left = right[::-1].copy()
    left[:, 0] *= -1.0
    bottom = top[::-1].copy()
    bottom[:, 1] *= -1.0
    pts = np.vstack((right[:-1], top[:-1], left[:-1], bottom[:-1]))
    return Polygon(pts)


def _assemble(spec: DesignSpec, fab: FabricationParams,
              arc_resolution: float) -> CrossSection:
    """Build the CrossSection records for a consistent (spec, fab) pair."""
    h, s, w = spec.center_height, spec.side_height, spec.width
    r_c = 0.5 * h
    theta_c = fab.center_arc_length / r_c
    width_c = h * math.sin(fab.center_arc_length / h)
    center = CenterChannel(
        radius=r_c,
        arc_angle=theta_c,
        chord_angle=math.pi - theta_c,
        width=width_c,
        strip_width=fab.strip_width,
        area=center_area(fab.center_arc_length, fab.strip_width, theta_c),
    )
    r_s = 0.5 * s
    theta_s = fab.side_arc_length / r_s
    conj = 2.0 * math.pi - theta_s
    width_s = r_s * (1.0 + math.cos(0.5 * conj))
    width = width_c + 2.0 * width_s
    center_x = 0.5 * width - r_s
    right = SideChannel(
        radius=r_s,
        arc_angle=theta_s,
        conjugate_angle=conj,
        conjugate_arc_length=math.pi * s - fab.side_arc_length,
        width=width_s,
        strip_width=fab.strip_width,
        center_x=center_x,
        area=0.0,
    )
    right = replace(right, area=side_channel_polygon(right, arc_resolution).area())
    left = replace(right, center_x=-center_x)
    return CrossSection(spec=spec, fab=fab, center=center,
                        sides=(left, right), width=width)


def build_cross_section(spec: DesignSpec,
                        arc_resolution: float = DEFAULT_ARC_RESOLUTION) -> CrossSection:
    """Full geometry for a feasible spec via the closed-form inverse.

    ``arc_resolution`` is the max chord-sagitta error (mm) used when
    polygonizing the side channels for their areas.

    Raises:
        InfeasibleSpec: propagated from :func:`inverse_design`.
    """
    fab = inverse_design(spec)
    return _assemble(spec, fab, arc_resolution)
