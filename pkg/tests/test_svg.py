"""
Tests for the SVG chart writer.
"""

import os
import tempfile
import unittest
import xml.etree.ElementTree as ET

from pydantic import ValidationError

from creep_rheology.utils.config import GridScale
from creep_rheology.utils.svg import (
    ChartSeries,
    LineChart,
    decade_ticks,
    nice_ticks,
    render_svg,
    write_svg,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def make_chart(x_scale=GridScale.LINEAR):
    xs = [0.01, 0.1, 1.0, 10.0, 100.0]
    return LineChart(
        title="Creep functions",
        x_label="t",
        y_label="psi(t)",
        x_scale=x_scale,
        series=[
            ChartSeries(label="Becker", x=xs, y=[0.01, 0.1, 0.8, 2.9, 5.2]),
            ChartSeries(label="Lomnitz", x=xs, y=[0.01, 0.09, 0.69, 2.4, 4.6]),
        ],
    )


class TestTicks(unittest.TestCase):
    """Tests for tick generation."""

    def test_nice_ticks_cover_range(self):
        ticks = nice_ticks(0.0, 10.0)
        self.assertEqual(ticks, [0.0, 2.0, 4.0, 6.0, 8.0, 10.0])

    def test_nice_ticks_fractional(self):
        ticks = nice_ticks(0.0, 0.37)
        self.assertLessEqual(ticks[0], 0.0)
        self.assertGreaterEqual(ticks[-1], 0.37)
        self.assertLessEqual(len(ticks), 10)

    def test_nice_ticks_degenerate_range(self):
        ticks = nice_ticks(1.0, 1.0)
        self.assertGreater(ticks[-1], ticks[0])

    def test_decade_ticks(self):
        self.assertEqual(decade_ticks(1e-2, 1e2), [1e-2, 1e-1, 1.0, 10.0, 100.0])
        self.assertEqual(decade_ticks(2.0, 5.0), [1.0, 10.0])


class TestLineChart(unittest.TestCase):
    """Tests for chart rendering."""

    def test_series_lengths_must_match(self):
        with self.assertRaises(ValidationError):
            ChartSeries(label="bad", x=[1.0, 2.0], y=[1.0])

    def test_render_is_valid_svg(self):
        root = ET.fromstring(render_svg(make_chart()).encode("utf-8"))
        self.assertEqual(root.tag, f"{SVG_NS}svg")
        self.assertEqual(root.get("version"), "1.1")
        polylines = root.findall(f"{SVG_NS}polyline")
        self.assertEqual(len(polylines), 2)
        self.assertEqual(len(polylines[0].get("points").split()), 5)

    def test_log_axis_drops_non_positive_abscissae(self):
        chart = LineChart(
            title="Relaxation",
            x_label="t",
            y_label="phi(t)",
            x_scale=GridScale.LOG,
            series=[ChartSeries(label="Becker", x=[0.0, 0.1, 1.0], y=[1.0, 0.9, 0.5])],
        )
        root = ET.fromstring(render_svg(chart).encode("utf-8"))
        points = root.find(f"{SVG_NS}polyline").get("points").split()
        self.assertEqual(len(points), 2)

    def test_log_axis_labels(self):
        text = render_svg(make_chart(GridScale.LOG))
        for label in (">0.01<", ">0.1<", ">1<", ">10<", ">100<"):
            self.assertIn(label, text)

    def test_escapes_text(self):
        chart = make_chart().model_copy(update={"title": "a < b & c"})
        self.assertIn("a &lt; b &amp; c", render_svg(chart))

    def test_no_drawable_points(self):
        chart = LineChart(
            title="empty",
            x_label="t",
            y_label="y",
            x_scale=GridScale.LOG,
            series=[ChartSeries(label="s", x=[0.0], y=[1.0])],
        )
        with self.assertRaises(ValueError):
            render_svg(chart)

    def test_deterministic(self):
        self.assertEqual(render_svg(make_chart()), render_svg(make_chart()))

    def test_write_svg(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "chart.svg")
            text = write_svg(make_chart(), path)
            with open(path, encoding="utf-8") as f:
                self.assertEqual(f.read(), text)
        self.assertIsNone(write_svg(make_chart(), None))


if __name__ == "__main__":
    unittest.main()
