"""Staircase pictures of ideals in two variables, as plain SVG 1.1 text.

The shaded region is the union of the boxes, clipped to the axis range.
Boundary pieces that belong to the ideal are solid, pieces that do not are
dashed, and box corners get a circle that is filled iff the corner monomial is
in the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DimensionError
from .exponent import format_exponent
from .ideal import Ideal, member


@dataclass(frozen=True)
class RenderSpec:
    size: int = 320
    margin: int = 30
    axis_max: Optional[Fraction] = None
    fill: str = "#999999"
    stroke: str = "#000000"
    corner_radius: float = 3.0


def _axis_max(ideal: Ideal, spec: RenderSpec) -> Fraction:
    if spec.axis_max is not None:
        return Fraction(spec.axis_max)
    top = max((a for b in ideal.boxes for a in b.alpha), default=Fraction(0))
    return Fraction(top) + 1


def _segments(ideal: Ideal, top: Fraction):
    """Boundary pieces of the staircase as ``(x1, y1, x2, y2, in_ideal)``."""
    boxes = ideal.boxes
    xs = sorted({b.alpha[0] for b in boxes if b.alpha[0] < top} | {top})
    ys = sorted({b.alpha[1] for b in boxes if b.alpha[1] < top} | {top})

    def interior(x, y):
        return any(x > b.alpha[0] and y > b.alpha[1] for b in boxes)

    out = set()
    for b in boxes:
        a, c = b.alpha
        if a >= top or c >= top:
            continue
        cuts = [y for y in ys if y > c]
        lo = c
        for y in cuts:
            mid = (a, (lo + y) / 2)
            if not interior(*mid):
                out.add((a, lo, a, y, member(mid, ideal)))
            lo = y
        cuts = [x for x in xs if x > a]
        lo = a
        for x in cuts:
            mid = ((lo + x) / 2, c)
            if not interior(*mid):
                out.add((lo, c, x, c, member(mid, ideal)))
            lo = x
    return sorted(out)


def render_svg(ideal: Ideal, spec: RenderSpec = RenderSpec()) -> str:
    if ideal.d != 2:
        raise DimensionError(f"staircase pictures need d = 2, got d = {ideal.d}")
    top = _axis_max(ideal, spec)
    plot = spec.size - 2 * spec.margin

    def px(x):
        return f"{spec.margin + float(Fraction(x) / top) * plot:.2f}"

    def py(y):
        return f"{spec.margin + plot - float(Fraction(y) / top) * plot:.2f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f"<title>{ideal}</title>",
        '<g id="region">',
    ]
    for b in ideal.boxes:
        a, c = b.alpha
        if a >= top or c >= top:
            continue
        lines.append(
            f'<rect x="{px(a)}" y="{py(top)}" width="{float((top - a) / top) * plot:.2f}" '
            f'height="{float((top - c) / top) * plot:.2f}" fill="{spec.fill}" stroke="none"/>'
        )
    lines.append("</g>")

    lines.append('<g id="axes" stroke="#000000" stroke-width="1">')
    lines.append(f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(top)}" y2="{py(0)}"/>')
    lines.append(f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(top)}"/>')
    for k in range(1, int(top) + 1):
        lines.append(f'<line x1="{px(k)}" y1="{py(0)}" x2="{px(k)}" y2="{float(py(0)) + 4:.2f}"/>')
        lines.append(f'<line x1="{px(0)}" y1="{py(k)}" x2="{float(px(0)) - 4:.2f}" y2="{py(k)}"/>')
    lines.append("</g>")

    lines.append(f'<g id="boundary" stroke="{spec.stroke}" stroke-width="1.5">')
    for x1, y1, x2, y2, solid in _segments(ideal, top):
        dash = "" if solid else ' stroke-dasharray="5,4"'
        lines.append(f'<line x1="{px(x1)}" y1="{py(y1)}" x2="{px(x2)}" y2="{py(y2)}"{dash}/>')
    lines.append("</g>")

    lines.append(f'<g id="corners" stroke="{spec.stroke}" stroke-width="1">')
    for b in ideal.boxes:
        a, c = b.alpha
        if a >= top or c >= top:
            continue
        filled = member((a, c), ideal)
        fill = spec.stroke if filled else "#ffffff"
        label = f"({format_exponent(a)},{format_exponent(c)})"
        lines.append(
            f'<circle cx="{px(a)}" cy="{py(c)}" r="{spec.corner_radius}" fill="{fill}">'
            f"<title>{label}</title></circle>"
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
