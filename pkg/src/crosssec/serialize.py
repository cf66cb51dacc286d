"""Canonical serialization: stable bytes for identical inputs.

JSON and CSV field names mirror the symbol vocabulary with unit suffixes
(``H_c_mm``, ``S_c_mm``, ``theta_c_rad``).  Every float is rounded to 9
significant digits before formatting, keys are sorted and newlines are
LF, so serialize -> parse -> serialize is idempotent and repeated runs
are byte-identical.  Infinities (the ergonomic index when the channel
heights match) serialize as the strings ``"inf"`` / ``"-inf"``.
"""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .analysis import SweepRecord, ergonomic_index
from .geometry import (CrossSection, DesignSpec, FabricationParams,
                       FeasibilityReport)
from .polygon import Polygon
from .solver import OracleResult

SWEEP_CSV_HEADER = ("S_c_mm", "L_mm", "S_s_mm", "H_c_mm", "H_s_mm", "w_mm",
                    "ergonomic_index", "feasible", "reason")


def round_sig(value: float, digits: int = 9) -> float:
    """Round to ``digits`` significant digits (exact for inf/0)."""
    if value == 0.0 or not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


def fmt(value: float, digits: int = 9) -> str:
    """Format a float at ``digits`` significant digits; inf -> "inf"."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{digits}g}"


def canonical(obj):
    """Normalize a JSON-able tree: floats to 9 significant digits,
    infinities to strings, tuples to lists."""
    if isinstance(obj, dict):
        return {key: canonical(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(val) for val in obj]
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return round_sig(obj)
    return obj


def to_json(obj) -> str:
    """Canonical JSON text (sorted keys, 2-space indent, trailing LF)."""
    return json.dumps(canonical(obj), indent=2, sort_keys=True,
                      allow_nan=False) + "\n"


def spec_to_dict(spec: DesignSpec) -> dict:
    return {
        "H_c_mm": spec.center_height,
        "H_s_mm": spec.side_height,
        "w_mm": spec.width,
    }


def fab_to_dict(fab: FabricationParams) -> dict:
    return {
        "S_c_mm": fab.center_arc_length,
        "S_s_mm": fab.side_arc_length,
        "L_mm": fab.strip_width,
    }


def spec_from_dict(data: dict) -> DesignSpec:
    try:
        return DesignSpec(float(data["H_c_mm"]), float(data["H_s_mm"]),
                          float(data["w_mm"]))
    except KeyError as exc:
        raise ValueError(f"spec is missing field {exc.args[0]!r}") from exc
    except TypeError as exc:
        raise ValueError(f"spec has a non-numeric field: {exc}") from exc


def fab_from_dict(data: dict) -> FabricationParams:
    try:
        return FabricationParams(float(data["S_c_mm"]), float(data["S_s_mm"]),
                                 float(data["L_mm"]))
    except KeyError as exc:
        raise ValueError(f"fab is missing field {exc.args[0]!r}") from exc
    except TypeError as exc:
        raise ValueError(f"fab has a non-numeric field: {exc}") from exc


def report_to_dict(report: FeasibilityReport) -> dict:
    return {
        "feasible": report.feasible,
        "violations": list(report.violations),
    }


def section_to_dict(section: CrossSection) -> dict:
    center = section.center
    side = section.sides[1]
    return {
        "spec": spec_to_dict(section.spec),
        "fab": fab_to_dict(section.fab),
        "center": {
            "radius_mm": center.radius,
            "arc_angle_rad": center.arc_angle,
            "chord_angle_rad": center.chord_angle,
            "width_mm": center.width,
            "area_mm2": center.area,
        },
        "side": {
            "radius_mm": side.radius,
            "arc_angle_rad": side.arc_angle,
            "conjugate_angle_rad": side.conjugate_angle,
            "conjugate_arc_length_mm": side.conjugate_arc_length,
            "width_mm": side.width,
            "center_x_mm": side.center_x,
            "area_mm2": side.area,
        },
        "strip": {
            "width_mm": section.fab.strip_width,
            "x_mm": [seg[0][0] for seg in section.strip_segments],
        },
        "width_mm": section.width,
        "perimeter_mm": section.perimeter,
        "area_total_mm2": section.total_area,
        "ergonomic_index": ergonomic_index(section).index,
    }


def oracle_to_dict(arc_length: float, strip_width: float, grid_points: int,
                   result: OracleResult) -> dict:
    return {
        "S_c_mm": arc_length,
        "L_mm": strip_width,
        "grid_points": grid_points,
        "grid_step_rad": result.grid_step,
        "theta_argmax_rad": result.grid_argmax,
        "theta_root_rad": result.analytic_root,
        "theta_parabolic_rad": result.parabolic_argmax,
        "A_c_at_argmax_mm2": result.area_at_argmax,
        "agreement": abs(result.grid_argmax - result.analytic_root)
                     <= result.grid_step,
    }


def sweep_to_csv(records) -> str:
    """CSV with the fixed header; floats at 9 significant digits,
    infinite index as "inf", empty geometry cells on infeasible rows."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_CSV_HEADER)
    for rec in records:
        writer.writerow(_sweep_row(rec))
    return out.getvalue()


def _sweep_row(rec: SweepRecord) -> list[str]:
    def opt(value):
        return "" if value is None else fmt(value)

    return [
        fmt(rec.center_arc_length),
        fmt(rec.strip_width),
        fmt(rec.side_arc_length),
        opt(rec.center_height),
        opt(rec.side_height),
        opt(rec.width),
        opt(rec.ergonomic_index),
        "true" if rec.feasible else "false",
        rec.failure_reason or "",
    ]


def read_outline_csv(path) -> Polygon:
    """Read a measured outline: two columns x_mm, y_mm.

    Tolerates an optional header row, CRLF line endings and blank lines.
    Winding is normalized to counter-clockwise.

    Raises:
        ValueError: unreadable rows or fewer than 3 vertices.
    """
    points: list[tuple[float, float]] = []
    with open(path, "r", encoding="utf-8", newline="") as handle:
        for row_num, row in enumerate(csv.reader(handle), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < 2:
                raise ValueError(f"{path}: row {row_num} has fewer than 2 columns")
            try:
                x, y = float(row[0]), float(row[1])
            except ValueError:
                if row_num == 1:
                    continue  # header row
                raise ValueError(
                    f"{path}: row {row_num} is not numeric: {row[:2]!r}") from None
            points.append((x, y))
    if len(points) < 3:
        raise ValueError(f"{path}: outline needs at least 3 vertices")
    poly = Polygon(np.asarray(points))
    if poly.signed_area() < 0.0:
        poly = Polygon(poly.points[::-1])
    return poly
