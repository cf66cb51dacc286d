import math
import re

import pytest

from crosssec.geometry import DesignSpec, build_cross_section
from crosssec.render import render_svg
from crosssec.serialize import fmt


@pytest.fixture(scope="module")
def s1_svg(s1_section):
    return render_svg(s1_section)


def arc_commands(path_d):
    return re.findall(r"A [^A]+", path_d)


class TestStructure:
    def test_arc_path_counts(self, s1_svg):
        center_paths = re.findall(r'class="membrane center-arc" d="([^"]+)"',
                                  s1_svg)
        side_paths = re.findall(r'class="membrane side-arc" d="([^"]+)"',
                                s1_svg)
        assert len(center_paths) == 2
        assert len(side_paths) == 2
        assert sum(len(arc_commands(d)) for d in center_paths) == 2
        assert sum(len(arc_commands(d)) for d in side_paths) == 4
        assert "polyline" not in s1_svg

    def test_strip_lines(self, s1_svg, s1_section):
        lines = re.findall(r'<line class="strip" ([^/]+)/>', s1_svg)
        assert len(lines) == 2
        x = fmt(0.5 * s1_section.center.width, 9)
        assert any(f'x1="{x}"' in attrs for attrs in lines)

    def test_center_crosses(self, s1_svg):
        assert s1_svg.count('class="cross"') == 3

    def test_dimension_labels(self, s1_svg, s1_section):
        for symbol, value in (("H_c", s1_section.spec.center_height),
                              ("H_s", s1_section.spec.side_height),
                              ("w", s1_section.width),
                              ("w_c", s1_section.center.width)):
            pattern = rf">{symbol} = {re.escape(f'{value:.6g}')}<"
            assert re.search(pattern, s1_svg), pattern

    def test_viewbox_width_is_overall_width(self, s1_svg, s1_section):
        viewbox = re.search(r'viewBox="([^"]+)"', s1_svg).group(1)
        x0, y0, width, height = (float(v) for v in viewbox.split())
        assert width == float(fmt(s1_section.width, 9))
        # halves are formatted independently of the width
        assert x0 == pytest.approx(-0.5 * width, abs=1e-6)
        assert height == pytest.approx(-2.0 * y0, abs=1e-6)
        assert f'width="{fmt(s1_section.width, 9)}mm"' in s1_svg

    def test_mm_units(self, s1_svg):
        assert re.search(r'width="[0-9.]+mm"', s1_svg)
        assert re.search(r'height="[0-9.]+mm"', s1_svg)


class TestArcGeometry:
    def test_side_arc_split_endpoints_meet(self, s1_section):
        svg = render_svg(s1_section)
        side_d = re.findall(r'class="membrane side-arc" d="([^"]+)"', svg)[0]
        # M x0 y0 A r r 0 0 0 xm ym A r r 0 0 0 x1 y1
        nums = [float(v) for v in re.findall(r"-?\d+\.?\d*(?:e-?\d+)?", side_d)]
        x0, y0 = nums[0], nums[1]
        xm, ym = nums[7], nums[8]
        s = s1_section.sides[1]
        # outermost point of the right channel, y negated in SVG frame;
        # coordinates carry 9 significant digits, so ~5e-7 mm of rounding
        assert math.hypot(xm - s.center_x, ym) == pytest.approx(
            s.radius, abs=2e-6)
        assert math.hypot(x0 - s.center_x, y0) == pytest.approx(
            s.radius, abs=2e-6)

    def test_full_circle_side_channels(self):
        svg = render_svg(build_cross_section(DesignSpec(1.0, 1.0, 3.0)))
        side_paths = re.findall(r'class="membrane side-arc" d="([^"]+)"', svg)
        assert len(side_paths) == 2
        for d in side_paths:
            halves = arc_commands(d)
            assert len(halves) == 2
            # the two halves close the full circle: last point == M point
            nums = [float(v) for v in re.findall(r"-?\d+\.?\d*(?:e-?\d+)?", d)]
            assert nums[-2] == pytest.approx(nums[0], abs=1e-9)
            assert nums[-1] == pytest.approx(nums[1], abs=1e-9)


class TestDeterminism:
    def test_byte_identical_renders(self, s1_section):
        assert render_svg(s1_section) == render_svg(s1_section)

    def test_no_environment_noise(self, s1_svg):
        assert "date" not in s1_svg.lower()
        assert "time" not in s1_svg.lower()
