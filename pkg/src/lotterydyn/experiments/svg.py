#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Static SVG 1.1 scatter plots with one least-squares line per policy."""

from collections.abc import Sequence
from html import escape
from pathlib import Path

from lotterydyn.common.exceptions import OutputError
from lotterydyn.experiments.models import PlotSeries

WIDTH = 640
HEIGHT = 420
MARGIN = 56
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")

AXIS_LABELS = {
    "inv_eps": "1/eps",
    "log_inv_eps": "log(1/eps)",
    "loglog_inv_eps": "lglg(1/eps)",
    "inv_eps_fifth": "(1/eps)^(1/5)",
    "log_inv_eps_fifth": "log(1/eps)^5",
    "nlogn": "n log n",
    "n2": "n^2",
    "n3": "n^3",
    "loglog_inv_gamma": "lglg(1/gamma)",
}


def _bounds(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        pad = abs(lo) * 0.1 or 1.0
        return lo - pad, hi + pad
    return lo, hi


def render_svg(series: Sequence[PlotSeries], tag: str, title: str = "") -> str:
    xs = [p.x for s in series for p in s.points]
    ys = [p.mean_steps for s in series for p in s.points]
    if not xs:
        xs, ys = [0.0], [0.0]
    x_lo, x_hi = _bounds(xs)
    y_lo, y_hi = _bounds([*ys, 0.0])
    plot_w, plot_h = WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN

    def px(x: float) -> float:
        return MARGIN + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<text x="{WIDTH / 2}" y="{HEIGHT - 16}" text-anchor="middle">{escape(AXIS_LABELS.get(tag, tag))}</text>',
        f'<text x="16" y="{HEIGHT / 2}" text-anchor="middle" transform="rotate(-90 16 {HEIGHT / 2})">mean steps</text>',
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 16}" text-anchor="middle">{x_lo:.3g}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 16}" text-anchor="middle">{x_hi:.3g}</text>',
        f'<text x="{MARGIN - 6}" y="{HEIGHT - MARGIN}" text-anchor="end">{y_lo:.3g}</text>',
        f'<text x="{MARGIN - 6}" y="{MARGIN + 4}" text-anchor="end">{y_hi:.3g}</text>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-size="14">{escape(title)}</text>'
        )

    for index, s in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        for p in s.points:
            parts.append(f'<circle cx="{px(p.x):.2f}" cy="{py(p.mean_steps):.2f}" r="3" fill="{color}"/>')
        if len(s.points) > 1:
            y0 = s.intercept + s.slope * x_lo
            y1 = s.intercept + s.slope * x_hi
            parts.append(
                f'<line x1="{px(x_lo):.2f}" y1="{py(y0):.2f}" x2="{px(x_hi):.2f}" y2="{py(y1):.2f}" '
                f'stroke="{color}" stroke-dasharray="4 3"/>'
            )
        label = s.policy if s.correlation is None else f"{s.policy} (r={s.correlation:.3f})"
        legend_y = MARGIN + 16 * index
        parts.append(
            f'<rect x="{WIDTH - MARGIN - 130}" y="{legend_y - 9}" width="10" height="10" fill="{color}"/>'
        )
        parts.append(f'<text x="{WIDTH - MARGIN - 115}" y="{legend_y}">{escape(label)}</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(series: Sequence[PlotSeries], tag: str, path: Path, title: str = "") -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(render_svg(series, tag, title), encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Error writing SVG to {path}: {e}") from e
    return path


# 🎟️🎲🔚
