"""Phase-diagram data over a rational grid, and a static SVG rendering of it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .phase_regions import INTERIOR, RegionLabel, boundary_slope, classify

_PALETTE = (
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f",
)
_EDGE = "#bab0ac"


@dataclass(frozen=True)
class GridRow:
    J1: Fraction
    J2: Fraction
    label: RegionLabel

    def to_json(self) -> dict:
        return {
            "J1": str(self.J1),
            "J2": str(self.J2),
            "members": sorted(self.label.members),
            "detail": self.label.detail,
        }


def grid_values(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    vals = []
    v = lo
    while v <= hi:
        vals.append(v)
        v += step
    return vals


def phase_grid(k: int, lo: Fraction, hi: Fraction, step: Fraction) -> list[GridRow]:
    vals = grid_values(lo, hi, step)
    return [GridRow(a, b, classify((a, b), k)) for a in vals for b in vals]


def boundary_rays(k: int) -> list[tuple[str, tuple[int, int]]]:
    """(label, direction) of the k+2 rays bounding the regions, from the origin."""
    rays = [(f"B_{i}", (boundary_slope(i, k), 1)) for i in range(k + 1)]
    rays.append(("B", (0, -1)))
    return rays


def _clip_ray(direction, lo: float, hi: float):
    """Segment of the ray t*direction (t >= 0) inside the square [lo, hi]^2, or None."""
    t0, t1 = 0.0, float("inf")
    for d in direction:
        if d == 0:
            if not lo <= 0 <= hi:
                return None
            continue
        a, b = lo / d, hi / d
        t0, t1 = max(t0, min(a, b)), min(t1, max(a, b))
    if t1 <= t0:
        return None
    return [(t0 * direction[0], t0 * direction[1]), (t1 * direction[0], t1 * direction[1])]


def phase_svg(k: int, rows: list[GridRow], lo: Fraction, hi: Fraction, step: Fraction, size: int = 480) -> str:
    span = float(hi - lo) + float(step)
    scale = size / span
    lo_f, hi_f = float(lo), float(hi)

    def px(J1: float, J2: float) -> tuple[float, float]:
        return (J1 - lo_f + float(step) / 2) * scale, (hi_f - J2 + float(step) / 2) * scale

    cell = float(step) * scale
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>Ground-state phase diagram, k = {k}</title>",
        '<g class="cells">',
    ]
    for row in rows:
        x, y = px(float(row.J1), float(row.J2))
        colour = _PALETTE[row.label.index % len(_PALETTE)] if row.label.kind == INTERIOR else _EDGE
        parts.append(
            f'<rect x="{x - cell / 2:.2f}" y="{y - cell / 2:.2f}" width="{cell:.2f}" height="{cell:.2f}" '
            f'fill="{colour}" data-members="{";".join(map(str, sorted(row.label.members)))}"/>'
        )
    parts.append("</g>")
    parts.append('<g class="rays" stroke="black" stroke-width="1.5">')
    for name, direction in boundary_rays(k):
        seg = _clip_ray(direction, lo_f, hi_f)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = px(*seg[0]), px(*seg[1])
        parts.append(
            f'<line class="ray" data-label="{escape(name)}" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}"/>'
        )
        parts.append(
            f'<text class="ray-label" x="{x2:.2f}" y="{y2:.2f}" font-size="12" '
            f'stroke="none">{escape(name)}</text>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
