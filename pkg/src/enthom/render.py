"""Barcode rendering: ASCII for terminals, SVG for figures.

Connected components draw black, holes red, voids blue.  Infinite bars run
to the right edge and end in an arrowhead.  Bars are ordered top to bottom
by (dimension, birth, death) so that output is reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .homology import Barcode

DIM_COLORS = {0: "black", 1: "red", 2: "blue"}
_FALLBACK_COLOR = "gray"


@dataclass(frozen=True)
class RenderSpec:
    eps_max: float | None = None  # None: 1.2 x largest finite endpoint
    width: int = 640
    height_per_bar: int = 18
    ascii_width: int = 100
    colors: dict = field(default_factory=lambda: dict(DIM_COLORS))


def _bars_sorted(bc: Barcode):
    out = []
    for dim in bc.dims():
        for birth, death in bc.bars.get(dim, ()):
            out.append((dim, birth, death))
    out.sort(key=lambda t: (t[0], t[1], t[2]))
    return out


def _resolve_eps_max(bc: Barcode, spec: RenderSpec) -> float:
    if spec.eps_max is not None:
        if spec.eps_max <= 0:
            raise ValueError("eps_max must be positive")
        return spec.eps_max
    finite = [v for dim in bc.dims() for bar in bc.bars.get(dim, ())
              for v in bar if math.isfinite(v) and v > 0]
    return 1.2 * max(finite) if finite else 1.0


def render_ascii(bc: Barcode, spec: RenderSpec = RenderSpec()) -> str:
    """One text line per bar; '-' spans the bar, '>' marks an infinite end."""
    eps_max = _resolve_eps_max(bc, spec)
    cols = max(20, spec.ascii_width - 6)  # room for the 'Hk  ' prefix

    def col(v: float) -> int:
        return min(cols, int(round(min(v, eps_max) / eps_max * cols)))

    left, right = f"{0.0:g}", f"eps={eps_max:g}"
    header = "eps  " + left + " " * max(1, cols - len(left) - len(right) + 1) + right
    lines = [header, "     " + "." * (cols + 1)]
    for dim, birth, death in _bars_sorted(bc):
        b = col(birth)
        if math.isinf(death):
            body = " " * b + "-" * (cols - b) + ">"
        else:
            d = max(col(death), b + 1)  # keep at least one mark visible
            body = " " * b + "-" * (d - b)
        lines.append(f"H{dim}   " + body)
    return "\n".join(lines) + "\n"


def render_svg(bc: Barcode, spec: RenderSpec = RenderSpec()) -> str:
    """SVG 1.1 document with one ``line`` element per bar."""
    eps_max = _resolve_eps_max(bc, spec)
    bars = _bars_sorted(bc)
    margin = 10
    axis = 22
    width = spec.width
    height = axis + margin + max(1, len(bars)) * spec.height_per_bar + margin
    span = width - 2 * margin

    def x(v: float) -> float:
        return margin + min(v, eps_max) / eps_max * span

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<line x1="{margin}" y1="{axis - 6}" x2="{width - margin}" y2="{axis - 6}" '
        f'stroke="lightgray" stroke-width="1"/>',
        f'<text x="{margin}" y="{axis - 10}" font-size="10" fill="gray">0</text>',
        f'<text x="{width - margin}" y="{axis - 10}" font-size="10" fill="gray" '
        f'text-anchor="end">eps={eps_max:.6g}</text>',
    ]
    y = axis + margin
    for dim, birth, death in bars:
        color = spec.colors.get(dim, _FALLBACK_COLOR)
        x1 = x(birth)
        x2 = x(death) if math.isfinite(death) else float(width - margin)
        x2 = max(x2, x1 + 1.0)
        parts.append(f'<line x1="{x1:.2f}" y1="{y}" x2="{x2:.2f}" y2="{y}" '
                     f'stroke="{color}" stroke-width="3"/>')
        if math.isinf(death):
            parts.append(f'<polygon points="{x2:.2f},{y - 5} {x2 + 8:.2f},{y} '
                         f'{x2:.2f},{y + 5}" fill="{color}"/>')
        y += spec.height_per_bar
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
