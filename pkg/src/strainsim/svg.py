"""Deterministic SVG line plots, built as plain markup.

No plotting library: the same columns always produce the same bytes,
so rendered plots can be golden-file tested like any other artifact.
Layout is fixed (one viewport, one axes box, ticks at even fractions
of the data range) and every coordinate is formatted with an explicit
precision so platform float printing differences cannot leak in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

__all__ = ["PlotSpec", "render_line_plot"]

WIDTH = 800
HEIGHT = 480
MARGIN_LEFT = 76
MARGIN_RIGHT = 24
MARGIN_TOP = 44
MARGIN_BOTTOM = 58
N_TICKS = 5

PALETTE = ("#2060a8", "#c03028", "#2a8a4a", "#8050a0", "#b07820", "#106060")

BACKGROUND = "#ffffff"
AXIS_COLOR = "#303030"
GRID_COLOR = "#d8d8d8"
TEXT_COLOR = "#202020"
FONT = "font-family=\"Helvetica, Arial, sans-serif\""


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: one x column against one or more y columns."""

    x_column: str
    y_columns: tuple[str, ...]
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    legend: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.y_columns) == 0:
            raise ValueError("at least one y column is required")
        if self.legend and len(self.legend) != len(self.y_columns):
            raise ValueError("legend length must match y_columns")


def _axis_range(values: np.ndarray) -> tuple[float, float]:
    lo = float(values.min())
    hi = float(values.max())
    if lo == hi:
        pad = abs(lo) * 0.5 + 1.0
        return lo - pad, hi + pad
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    if value == 0.0:
        # Avoid the negative-zero label that plain formatting can emit.
        value = 0.0
    return f"{value:.4g}"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )


def render_line_plot(columns: Mapping[str, Sequence[float]], spec: PlotSpec) -> str:
    """Render columns to SVG markup per the plot spec.

    Raises ValueError when a referenced column is absent or empty, or
    when the columns disagree on length. The output is self-contained
    markup with no external references and no run-dependent content.
    """
    for name in (spec.x_column, *spec.y_columns):
        if name not in columns:
            raise ValueError(f"column '{name}' not present in the data")
    x = np.asarray(columns[spec.x_column], dtype=float)
    if x.size == 0:
        raise ValueError("cannot plot empty series")
    ys = []
    for name in spec.y_columns:
        y = np.asarray(columns[name], dtype=float)
        if y.shape != x.shape:
            raise ValueError(f"column '{name}' does not match the x column length")
        ys.append(y)

    x_lo, x_hi = _axis_range(x)
    all_y = np.concatenate(ys)
    y_lo, y_hi = _axis_range(all_y)

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def to_px(xv: np.ndarray, yv: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        px = MARGIN_LEFT + (xv - x_lo) / (x_hi - x_lo) * plot_w
        py = MARGIN_TOP + (y_hi - yv) / (y_hi - y_lo) * plot_h
        return px, py

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    parts.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="{BACKGROUND}"/>')

    # Grid and ticks at even fractions of the padded data range.
    for i in range(N_TICKS):
        frac = i / (N_TICKS - 1)
        xt = x_lo + frac * (x_hi - x_lo)
        yt = y_lo + frac * (y_hi - y_lo)
        px = MARGIN_LEFT + frac * plot_w
        py = MARGIN_TOP + (1.0 - frac) * plot_h
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{MARGIN_TOP}" x2="{_fmt(px)}" '
            f'y2="{MARGIN_TOP + plot_h}" stroke="{GRID_COLOR}" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{MARGIN_LEFT}" y1="{_fmt(py)}" '
            f'x2="{MARGIN_LEFT + plot_w}" y2="{_fmt(py)}" '
            f'stroke="{GRID_COLOR}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{MARGIN_TOP + plot_h + 18}" {FONT} '
            f'font-size="12" fill="{TEXT_COLOR}" text-anchor="middle">'
            f"{_tick_label(xt)}</text>"
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(py + 4)}" {FONT} '
            f'font-size="12" fill="{TEXT_COLOR}" text-anchor="end">'
            f"{_tick_label(yt)}</text>"
        )

    parts.append(
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="{AXIS_COLOR}" stroke-width="1.5"/>'
    )

    for k, y in enumerate(ys):
        px, py = to_px(x, y)
        points = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
        color = PALETTE[k % len(PALETTE)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.8" '
            f'points="{points}"/>'
        )

    if spec.title:
        parts.append(
            f'<text x="{WIDTH // 2}" y="26" {FONT} font-size="16" '
            f'fill="{TEXT_COLOR}" text-anchor="middle">{_escape(spec.title)}</text>'
        )
    if spec.x_label:
        parts.append(
            f'<text x="{MARGIN_LEFT + plot_w // 2}" y="{HEIGHT - 16}" {FONT} '
            f'font-size="13" fill="{TEXT_COLOR}" text-anchor="middle">'
            f"{_escape(spec.x_label)}</text>"
        )
    if spec.y_label:
        cy = MARGIN_TOP + plot_h // 2
        parts.append(
            f'<text x="20" y="{cy}" {FONT} font-size="13" fill="{TEXT_COLOR}" '
            f'text-anchor="middle" transform="rotate(-90 20 {cy})">'
            f"{_escape(spec.y_label)}</text>"
        )

    labels = spec.legend if spec.legend else spec.y_columns
    if len(ys) > 1 or spec.legend:
        for k, label in enumerate(labels):
            ly = MARGIN_TOP + 14 + 18 * k
            lx = MARGIN_LEFT + plot_w - 150
            color = PALETTE[k % len(PALETTE)]
            parts.append(
                f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 24}" y2="{ly - 4}" '
                f'stroke="{color}" stroke-width="1.8"/>'
            )
            parts.append(
                f'<text x="{lx + 30}" y="{ly}" {FONT} font-size="12" '
                f'fill="{TEXT_COLOR}">{_escape(label)}</text>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
