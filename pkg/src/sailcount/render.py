"""SVG 1.1 drawing of a sail: lattice points, the diagonal and the sail polyline."""

from __future__ import annotations

from .lattice import contains, Vec2
from .sail import Sail

_CELL = 40
_MARGIN = 30
_MAX_GRID = 40_000  # skip background lattice points beyond this many cells


def sail_svg(s: Sail) -> str:
    w, h = s.alpha_x + 1, s.omega_y + 1
    cell = max(4, min(_CELL, 600 // max(w, h)))
    width = 2 * _MARGIN + w * cell
    height = 2 * _MARGIN + h * cell

    def xy(p: tuple[int, int]) -> tuple[int, int]:
        return _MARGIN + p[0] * cell, height - _MARGIN - p[1] * cell

    def px(p: tuple[int, int]) -> str:
        return "{},{}".format(*xy(p))

    (x0, y0), (x1, y1) = xy((0, 0)), xy((min(w, h),) * 2)

    lat = s.lattice
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f"<title>sail of {lat}</title>",
        f'<polyline points="{px((0, h))} {px((0, 0))} {px((w, 0))}" fill="none" stroke="black"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="gray" stroke-dasharray="4 3"/>',
    ]
    grid = range(h + 1) if (w + 1) * (h + 1) <= _MAX_GRID else range(0)
    for y in grid:
        for x in range(w + 1):
            if (x, y) != (0, 0) and contains(lat, Vec2(x, y)):
                cx, cy = xy((x, y))
                lines.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="gray"/>')
    lines.append(
        f'<polyline points="{" ".join(px(p) for p in s.points)}" fill="none" stroke="blue" stroke-width="2"/>'
    )
    for p in s.points:
        cx, cy = xy(p)
        colour = "red" if p.x == p.y else "blue"
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="{colour}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
