"""
Static SVG 1.1 line charts.

Charts are written as plain polylines with axis ticks; coordinates are rounded
to two decimals so that identical data always produce identical files.
"""

import logging
import math
from typing import List, Optional, Tuple
from xml.sax.saxutils import escape

from pydantic import BaseModel, Field, model_validator

from creep_rheology.utils.config import GridScale

logger = logging.getLogger(__name__)

WIDTH = 640
HEIGHT = 440
MARGIN_LEFT = 72
MARGIN_RIGHT = 24
MARGIN_TOP = 40
MARGIN_BOTTOM = 56

PALETTE = ("#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad")


class ChartSeries(BaseModel):
    """One curve of a chart."""

    label: str
    x: List[float]
    y: List[float]

    @model_validator(mode="after")
    def _check_lengths(self) -> "ChartSeries":
        if len(self.x) != len(self.y):
            raise ValueError(
                f"series '{self.label}' has {len(self.x)} x and {len(self.y)} y values"
            )
        return self


class LineChart(BaseModel):
    """A line chart with a linear or logarithmic abscissa."""

    title: str
    x_label: str
    y_label: str
    x_scale: GridScale = GridScale.LINEAR
    series: List[ChartSeries] = Field(..., min_length=1)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    if value == 0:
        return "0"
    if abs(value) >= 1e4 or abs(value) < 1e-3:
        return f"{value:.0e}".replace("e+0", "e").replace("e-0", "e-")
    return f"{value:.6g}"


def nice_ticks(low: float, high: float, target: int = 6) -> List[float]:
    """Round tick values covering [low, high] with roughly ``target`` intervals."""
    if high <= low:
        high = low + 1.0
    raw = (high - low) / target
    magnitude = 10 ** math.floor(math.log10(raw))
    for factor in (1, 2, 2.5, 5, 10):
        step = factor * magnitude
        if step >= raw:
            break
    first = math.floor(low / step + 1e-9)
    last = math.ceil(high / step - 1e-9)
    return [round(k * step, 12) for k in range(first, last + 1)]


def decade_ticks(low: float, high: float) -> List[float]:
    """Powers of ten spanning [low, high]."""
    first = math.floor(math.log10(low) + 1e-9)
    last = max(first + 1, math.ceil(math.log10(high) - 1e-9))
    return [10.0**k for k in range(first, last + 1)]


def _visible_points(chart: LineChart, series: ChartSeries) -> List[Tuple[float, float]]:
    points = []
    for x, y in zip(series.x, series.y):
        if not (math.isfinite(x) and math.isfinite(y)):
            continue
        if chart.x_scale == GridScale.LOG:
            if x <= 0:
                continue
            x = math.log10(x)
        points.append((x, y))
    return points


def render_svg(chart: LineChart) -> str:
    """Render a chart to SVG text."""
    curves = [_visible_points(chart, series) for series in chart.series]
    xs = [x for curve in curves for x, _ in curve]
    ys = [y for curve in curves for _, y in curve]
    if not xs:
        raise ValueError(f"chart '{chart.title}' has no drawable points")

    if chart.x_scale == GridScale.LOG:
        x_ticks = [math.log10(v) for v in decade_ticks(10 ** min(xs), 10 ** max(xs))]
    else:
        x_ticks = nice_ticks(min(xs), max(xs))
    y_ticks = nice_ticks(min(ys), max(ys))
    x_low, x_high = x_ticks[0], x_ticks[-1]
    y_low, y_high = y_ticks[0], y_ticks[-1]

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_low) / (x_high - x_low) * plot_w

    def py(y: float) -> float:
        return MARGIN_TOP + (y_high - y) / (y_high - y_low) * plot_h

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="15">{escape(chart.title)}</text>',
    ]

    for tick in x_ticks:
        label = _tick_label(10**tick if chart.x_scale == GridScale.LOG else tick)
        x = _fmt(px(tick))
        lines.append(
            f'<line x1="{x}" y1="{_fmt(MARGIN_TOP)}" x2="{x}" y2="{_fmt(MARGIN_TOP + plot_h)}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{x}" y="{_fmt(MARGIN_TOP + plot_h + 18)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{escape(label)}</text>'
        )
    for tick in y_ticks:
        y = _fmt(py(tick))
        lines.append(
            f'<line x1="{_fmt(MARGIN_LEFT)}" y1="{y}" x2="{_fmt(MARGIN_LEFT + plot_w)}" y2="{y}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{_fmt(MARGIN_LEFT - 6)}" y="{_fmt(py(tick) + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{escape(_tick_label(tick))}</text>'
        )

    lines.append(
        f'<rect x="{_fmt(MARGIN_LEFT)}" y="{_fmt(MARGIN_TOP)}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<text x="{_fmt(MARGIN_LEFT + plot_w / 2)}" y="{_fmt(HEIGHT - 14)}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13">'
        f"{escape(chart.x_label)}</text>"
    )
    lines.append(
        f'<text x="16" y="{_fmt(MARGIN_TOP + plot_h / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 16 {_fmt(MARGIN_TOP + plot_h / 2)})">'
        f"{escape(chart.y_label)}</text>"
    )

    for index, (series, curve) in enumerate(zip(chart.series, curves)):
        color = PALETTE[index % len(PALETTE)]
        path = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in curve)
        lines.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.8"/>'
        )
        legend_y = MARGIN_TOP + 18 + 18 * index
        legend_x = MARGIN_LEFT + plot_w - 150
        lines.append(
            f'<line x1="{_fmt(legend_x)}" y1="{_fmt(legend_y - 4)}" x2="{_fmt(legend_x + 24)}" '
            f'y2="{_fmt(legend_y - 4)}" stroke="{color}" stroke-width="1.8"/>'
        )
        lines.append(
            f'<text x="{_fmt(legend_x + 30)}" y="{_fmt(legend_y)}" font-family="sans-serif" '
            f'font-size="12">{escape(series.label)}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(chart: LineChart, path: Optional[str]) -> Optional[str]:
    """
    Render a chart and write it to ``path``.

    Raises:
        OSError: If the file cannot be written.
    """
    if not path:
        return None
    text = render_svg(chart)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info(f"Wrote chart '{chart.title}' to {path}")
    return text
