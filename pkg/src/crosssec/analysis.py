"""Design-space analysis: ergonomics, sweeps, forces, measured-vs-model.

Works on top of the geometry and solver layers; nothing here mutates its
inputs, and sweep output order is deterministic for identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegeneratePolygon, SolverError
from .geometry import (CrossSection, DEFAULT_ARC_RESOLUTION,
                       FabricationParams, side_channel_polygon)
from .polygon import Polygon
from .solver import DEFAULT_CONFIG, RootFindConfig, forward_geometry


@dataclass(frozen=True)
class ErgonomicReport:
    """Flatness measure of the section's upper profile.

    The straighter the line from the side-channel apex to the
    center-channel apex, the gentler the pressure gradient on a payload
    resting across the section; the index is the inverse slope magnitude
    of that line, so flatter is larger.

    Attributes:
        side_peak: Apex of a side channel, (w/2 - H_s/2, H_s/2) (mm).
        center_peak: Apex of the center channel, (0, H_c/2) (mm).
        slope: Signed rise over run from side peak to center peak.
        index: 1 / |slope|; +inf when the heights match exactly
            (serialized as the string "inf").
    """

    side_peak: tuple[float, float]
    center_peak: tuple[float, float]
    slope: float
    index: float


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated (S_c, L) cell of a constant-perimeter sweep.

    Geometry fields are None when the cell is infeasible; the reason
    string then says which relation failed.  CSV serialization mirrors
    the symbol names (``S_c_mm,L_mm,S_s_mm,H_c_mm,H_s_mm,w_mm,...``).
    """

    center_arc_length: float
    strip_width: float
    side_arc_length: float
    center_height: float | None
    side_height: float | None
    width: float | None
    ergonomic_index: float | None
    feasible: bool
    failure_reason: str | None


def ergonomic_index(section: CrossSection) -> ErgonomicReport:
    """Upper-profile flatness of a section; larger is flatter."""
    r_c = section.center.radius
    r_s = section.sides[1].radius
    side_peak = (0.5 * section.width - r_s, r_s)
    center_peak = (0.0, r_c)
    slope = (center_peak[1] - side_peak[1]) / (center_peak[0] - side_peak[0])
    index = math.inf if slope == 0.0 else 1.0 / abs(slope)
    return ErgonomicReport(side_peak=side_peak, center_peak=center_peak,
                           slope=slope, index=index)


def sweep_constant_perimeter(perimeter: float,
                             center_arc_lengths,
                             strip_widths,
                             cfg: RootFindConfig = DEFAULT_CONFIG) -> tuple[SweepRecord, ...]:
    """Evaluate every (S_c, L) cell at a fixed membrane perimeter.

    The side arc length of each cell is ``perimeter / 2 - S_c``.  Grids
    are sorted ascending and iterated S_c-major then L, so identical
    inputs always produce identical row order.  Infeasible cells are
    recorded with a reason, never dropped.

    Raises:
        ValueError: non-positive perimeter or empty grids.
    """
    if not math.isfinite(perimeter) or perimeter <= 0.0:
        raise ValueError(f"perimeter must be positive, got {perimeter!r}")
    arcs = sorted(float(v) for v in center_arc_lengths)
    strips = sorted(float(v) for v in strip_widths)
    if not arcs or not strips:
        raise ValueError("center_arc_lengths and strip_widths must be non-empty")
    records = []
    for s_c in arcs:
        s_s = 0.5 * perimeter - s_c
        for l in strips:
            records.append(_sweep_cell(s_c, s_s, l, cfg))
    return tuple(records)


def _sweep_cell(s_c: float, s_s: float, l: float,
                cfg: RootFindConfig) -> SweepRecord:
    reason = None
    if s_s <= 0.0:
        reason = f"side arc length {s_s:.9g} <= 0 at this perimeter"
    elif l < 0.0:
        reason = "strip width < 0"
    else:
        try:
            section = forward_geometry(FabricationParams(s_c, s_s, l), cfg)
        except (SolverError, ValueError) as exc:
            reason = str(exc)
        else:
            return SweepRecord(
                center_arc_length=s_c, strip_width=l, side_arc_length=s_s,
                center_height=section.spec.center_height,
                side_height=section.spec.side_height,
                width=section.width,
                ergonomic_index=ergonomic_index(section).index,
                feasible=True, failure_reason=None)
    return SweepRecord(
        center_arc_length=s_c, strip_width=l, side_arc_length=s_s,
        center_height=None, side_height=None, width=None,
        ergonomic_index=None, feasible=False, failure_reason=reason)


def eversion_force(pressure_kpa: float, area_mm2: float) -> float:
    """Eversion force of the pressurized section, N.

    F = P * A with P in kPa (1e-3 N/mm^2) and A in mm^2, so
    F = 1e-3 * P * A.

    Raises:
        ValueError: negative or non-finite input.
    """
    if not (math.isfinite(pressure_kpa) and math.isfinite(area_mm2)):
        raise ValueError("pressure and area must be finite")
    if pressure_kpa < 0.0:
        raise ValueError(f"pressure must be non-negative, got {pressure_kpa!r}")
    if area_mm2 < 0.0:
        raise ValueError(f"area must be non-negative, got {area_mm2!r}")
    return 1e-3 * pressure_kpa * area_mm2


def total_area(section: CrossSection,
               arc_resolution: float = DEFAULT_ARC_RESOLUTION) -> float:
    """Total enclosed area A_c + 2 A_s (mm^2) at the given polygonization
    tolerance (max chord-sagitta error, mm).

    The center area is closed form; the side area is recomputed from the
    sampled polygon, so refining ``arc_resolution`` converges.
    """
    side = section.sides[1]
    side_area = side_channel_polygon(side, arc_resolution).area()
    return section.center.area + 2.0 * side_area


def area_ratio(measured: Polygon, section: CrossSection,
               arc_resolution: float = DEFAULT_ARC_RESOLUTION) -> float:
    """Measured outline area divided by total model area.

    ``measured`` must wind counter-clockwise (positive shoelace area) and
    be free of proper self-crossings; scan ingestion normalizes winding
    before this check.

    Raises:
        DegeneratePolygon: non-positive area or self-intersecting outline.
    """
    signed = measured.signed_area()
    if signed <= 0.0:
        raise DegeneratePolygon(
            f"measured outline has non-positive area {signed:.9g}")
    if not measured.is_simple():
        raise DegeneratePolygon("measured outline crosses itself")
    return signed / total_area(section, arc_resolution)
