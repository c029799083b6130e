"""Persistence diagram scatter as a standalone SVG string."""

from __future__ import annotations

import math

from .core import Diagram

SIZE = 480
MARGIN = 40
BAND = 24  # height of the strip that holds points with infinite death


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def diagram_svg(*diagrams: Diagram, title: str = "") -> str:
    """Births on x, deaths on y, the diagonal drawn, infinite deaths in a band at the top.

    Dimension 0 points are circles, dimension 1 points are squares. Axes are
    linear and padded by 5% of the finite value range.
    """
    ivs = [iv for d in diagrams for iv in d if not iv.trivial]
    finite = [x for iv in ivs for x in (iv.birth, iv.death) if not math.isinf(x)]
    lo, hi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    if hi == lo:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    lo, hi = lo - pad, hi + pad
    plot_top = MARGIN + BAND
    span = SIZE - MARGIN - plot_top

    def sx(v: float) -> float:
        v = min(max(v, lo), hi)
        return MARGIN + (v - lo) / (hi - lo) * (SIZE - 2 * MARGIN)

    def sy(v: float) -> float:
        if v == math.inf:
            return MARGIN + BAND / 2
        v = min(max(v, lo), hi)
        return SIZE - MARGIN - (v - lo) / (hi - lo) * span

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE - 2 * MARGIN}" height="{BAND}" fill="#eeeeee"/>',
        f'<text x="{MARGIN + 4}" y="{MARGIN + BAND / 2 + 4}" font-size="11">inf</text>',
        f'<line x1="{_fmt(sx(lo))}" y1="{_fmt(sy(lo))}" x2="{_fmt(sx(hi))}" y2="{_fmt(sy(hi))}" '
        'stroke="gray" stroke-dasharray="4 3"/>',
        f'<line x1="{MARGIN}" y1="{SIZE - MARGIN}" x2="{SIZE - MARGIN}" y2="{SIZE - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{SIZE - MARGIN}" x2="{MARGIN}" y2="{plot_top}" stroke="black"/>',
        f'<text x="{MARGIN}" y="{SIZE - MARGIN + 16}" font-size="11">{lo:.3g}</text>',
        f'<text x="{SIZE - MARGIN}" y="{SIZE - MARGIN + 16}" font-size="11" text-anchor="end">{hi:.3g}</text>',
        f'<text x="{SIZE / 2}" y="{SIZE - 8}" font-size="12" text-anchor="middle">birth</text>',
    ]
    if title:
        out.append(f'<text x="{SIZE / 2}" y="{MARGIN - 12}" font-size="13" text-anchor="middle">{title}</text>')
    for iv in ivs:
        x, y = _fmt(sx(iv.birth)), _fmt(sy(iv.death))
        if iv.dim == 0:
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#1f77b4" fill-opacity="0.7"/>')
        else:
            out.append(
                f'<rect x="{_fmt(float(x) - 4)}" y="{_fmt(float(y) - 4)}" width="8" height="8" '
                'fill="#d62728" fill-opacity="0.7"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
