"""Minimal static SVG line chart, no plotting library required."""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


def _nice_step(span: float, target_ticks: int = 8) -> float:
    raw = span / max(target_ticks, 1)
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if raw <= m * mag:
            return m * mag
    return 10 * mag


def line_chart(
    series: Sequence[tuple[str, Sequence[float], Sequence[float]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    x_range: tuple[float, float] | None = None,
    width: int = 900,
    height: int = 560,
) -> str:
    """Render ``(label, xs, ys)`` series as polylines. NaN points break a line."""
    finite_y = [y for _, _, ys in series for y in ys if math.isfinite(y)]
    if not finite_y:
        raise ValueError("nothing to plot")
    xs_all = [x for _, xs, _ in series for x in xs]
    x0, x1 = x_range or (min(xs_all), max(xs_all))
    y_step = _nice_step(max(finite_y) - min(finite_y) or 1.0)
    y0 = math.floor(min(finite_y) / y_step) * y_step
    y1 = math.ceil(max(finite_y) / y_step) * y_step
    if y1 == y0:
        y1 = y0 + y_step

    left, right, top, bottom = 80, 200, 50, 60
    pw, ph = width - left - right, height - top - bottom

    def px(x: float) -> float:
        return left + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return top + (y1 - y) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{left + pw / 2:.1f}" y="28" text-anchor="middle" font-size="16">{escape(title)}</text>')

    x_step = _nice_step(x1 - x0, 9)
    n = int(round((x1 - x0) / x_step))
    for i in range(n + 1):
        x = x0 + i * x_step
        X = px(x)
        out.append(f'<line x1="{X:.1f}" y1="{top}" x2="{X:.1f}" y2="{top + ph}" stroke="#e5e5e5"/>')
        out.append(f'<text x="{X:.1f}" y="{top + ph + 18}" text-anchor="middle">{x:g}</text>')
    n = int(round((y1 - y0) / y_step))
    for i in range(n + 1):
        y = y0 + i * y_step
        Y = py(y)
        out.append(f'<line x1="{left}" y1="{Y:.1f}" x2="{left + pw}" y2="{Y:.1f}" stroke="#e5e5e5"/>')
        out.append(f'<text x="{left - 8}" y="{Y + 4:.1f}" text-anchor="end">{y:g}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#333333"/>')
    if x_label:
        out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 15}" text-anchor="middle">{escape(x_label)}</text>')
    if y_label:
        cy = top + ph / 2
        out.append(
            f'<text x="20" y="{cy:.1f}" text-anchor="middle" transform="rotate(-90 20 {cy:.1f})">{escape(y_label)}</text>'
        )

    for k, (label, xs, ys) in enumerate(series):
        color = COLORS[k % len(COLORS)]
        runs: list[list[str]] = [[]]
        for x, y in zip(xs, ys):
            if math.isfinite(y):
                runs[-1].append(f"{px(x):.1f},{py(y):.1f}")
            elif runs[-1]:
                runs.append([])
        for run in runs:
            if len(run) > 1:
                out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{" ".join(run)}"/>')
        ly = top + 10 + 20 * k
        lx = left + pw + 15
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 25}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 32}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
