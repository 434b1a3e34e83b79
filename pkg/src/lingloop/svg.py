"""Minimal stacked-bar SVG: one bar per routine, one segment per word length."""
from __future__ import annotations

from xml.sax.saxutils import escape

PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)

BAR_W = 36
GAP = 18
PLOT_H = 300
LEFT = 56
TOP = 40
BOTTOM = 44


def color_for(length: int) -> str:
    return PALETTE[(length - 1) % len(PALETTE)]


def stacked_bars(series, title: str = "") -> str:
    """Render ``series`` (objects with ``iteration``, ``counts``, ``total``) as SVG text."""
    width = LEFT + len(series) * (BAR_W + GAP) + GAP
    height = TOP + PLOT_H + BOTTOM
    base = TOP + PLOT_H
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="10">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{LEFT}" y="{TOP - 16}" font-size="13">{escape(title)}</text>')
    for tick in range(0, 11, 2):
        y = base - PLOT_H * tick / 10
        out.append(f'<line x1="{LEFT - 4}" y1="{y:.2f}" x2="{width - GAP}" y2="{y:.2f}" stroke="#dddddd"/>')
        out.append(f'<text x="{LEFT - 8}" y="{y + 3:.2f}" text-anchor="end">{tick / 10:.1f}</text>')
    for i, dist in enumerate(series):
        x = LEFT + GAP + i * (BAR_W + GAP)
        y = float(base)
        for length, count in sorted(dist.counts.items()):
            h = PLOT_H * count / dist.total
            y -= h
            out.append(
                f'<rect x="{x}" y="{y:.3f}" width="{BAR_W}" height="{h:.3f}" '
                f'fill="{color_for(length)}" stroke="#ffffff" stroke-width="0.5">'
                f'<title>length {length}: {count}/{dist.total}</title></rect>'
            )
            if h >= 11:
                out.append(
                    f'<text x="{x + BAR_W / 2:.1f}" y="{y + h / 2 + 3.5:.3f}" '
                    f'text-anchor="middle">{length}</text>'
                )
        out.append(f'<text x="{x + BAR_W / 2:.1f}" y="{base + 16}" text-anchor="middle">{dist.iteration}</text>')
    out.append(f'<text x="{LEFT + (width - LEFT) / 2:.1f}" y="{base + 36}" text-anchor="middle">routine</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
