"""Deterministic SVG pictures of contact cases.

One fixed-size drawing per case: the patch and its hull, the zero-velocity
line with an arrow into the positive side, the center of pressure with the
force magnitude, and the extended center-of-pressure set. All coordinates
go through one fixed viewport mapping and one fixed decimal format, so the
output bytes depend only on the input values.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    FULL_HULL,
    SEGMENT,
    VERTEX,
    Ellipse,
    Patch,
    boundary_points,
    bounding_box,
)
from .fields import Twist, Wrench
from .signorini import check

VIEW = 800.0
MARGIN = 0.10


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


class _Mapping:
    """World-to-viewport mapping: uniform scale, centered, y flipped."""

    def __init__(self, patch: Patch):
        lower, upper = bounding_box(patch)
        span = float(max(upper[0] - lower[0], upper[1] - lower[1], 1e-9))
        usable = VIEW * (1.0 - 2.0 * MARGIN)
        self.scale = usable / span
        self.center = 0.5 * (lower + upper)

    def to_svg(self, p) -> tuple[float, float]:
        p = np.asarray(p, dtype=float)
        x = VIEW / 2.0 + (p[0] - self.center[0]) * self.scale
        y = VIEW / 2.0 - (p[1] - self.center[1]) * self.scale
        return x, y

    def pt(self, p) -> str:
        x, y = self.to_svg(p)
        return f"{_fmt(x)},{_fmt(y)}"


def _path(m: _Mapping, pts: np.ndarray, close: bool) -> str:
    parts = [f"M {m.pt(pts[0])}"]
    parts.extend(f"L {m.pt(p)}" for p in pts[1:])
    if close:
        parts.append("Z")
    return " ".join(parts)


def _outline_points(patch: Patch) -> np.ndarray:
    if isinstance(patch, Ellipse):
        return boundary_points(patch, 180)
    return patch.vertices


def _zero_line_svg(m: _Mapping, patch: Patch, line) -> list[str]:
    # clip the infinite line against an inflated bounding box
    lower, upper = bounding_box(patch)
    pad = 0.35 * float(max(upper[0] - lower[0], upper[1] - lower[1], 1e-9))
    lower = lower - pad
    upper = upper + pad
    base = line.offset * line.normal
    d = line.direction
    ts: list[float] = []
    for axis in (0, 1):
        if abs(d[axis]) > 1e-15:
            for bound in (lower[axis], upper[axis]):
                ts.append((bound - base[axis]) / d[axis])
    if not ts:
        return []
    pts = [base + t * d for t in sorted(ts)]
    inside = [
        p
        for p in pts
        if lower[0] - 1e-9 <= p[0] <= upper[0] + 1e-9 and lower[1] - 1e-9 <= p[1] <= upper[1] + 1e-9
    ]
    if len(inside) < 2:
        return []
    a, b = inside[0], inside[-1]
    mid = 0.5 * (a + b)
    tip = mid + 0.12 * pad * line.normal
    wing = 0.04 * pad
    left = mid + wing * line.direction
    right = mid - wing * line.direction
    out = [
        f'<line x1="{_fmt(m.to_svg(a)[0])}" y1="{_fmt(m.to_svg(a)[1])}" '
        f'x2="{_fmt(m.to_svg(b)[0])}" y2="{_fmt(m.to_svg(b)[1])}" '
        'stroke="#c0392b" stroke-width="2"/>',
        f'<path d="M {m.pt(tip)} L {m.pt(left)} L {m.pt(right)} Z" fill="#c0392b"/>',
    ]
    return out


def render_svg(
    patch: Patch, w: Wrench, t: Twist, name: str = "case", tol: float = DEFAULT_TOL
) -> str:
    """Render one case to an SVG 1.1 document string."""
    verdict = check(patch, w, t, tol)
    m = _Mapping(patch)
    body: list[str] = []

    outline = _outline_points(patch)
    if len(outline) == 1:
        x, y = m.to_svg(outline[0])
        body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#2c3e50"/>'
        )
    elif len(outline) == 2:
        body.append(
            f'<path d="{_path(m, outline, close=False)}" stroke="#2c3e50" '
            'stroke-width="3" fill="none"/>'
        )
    else:
        body.append(
            f'<path d="{_path(m, outline, close=True)}" stroke="#2c3e50" '
            'stroke-width="2" fill="#d6eaf8" fill-opacity="0.6"/>'
        )

    if not isinstance(patch, Ellipse) and len(patch.hull) >= 3:
        ring = {tuple(v) for v in np.round(patch.vertices, 12)}
        hull_set = {tuple(v) for v in np.round(patch.hull, 12)}
        if ring != hull_set:
            body.append(
                f'<path d="{_path(m, patch.hull, close=True)}" stroke="#7f8c8d" '
                'stroke-width="1.5" stroke-dasharray="6,4" fill="none"/>'
            )

    if verdict.zero_line is not None:
        body.extend(_zero_line_svg(m, patch, verdict.zero_line))

    ecop = verdict.extended_cop
    if ecop.kind == SEGMENT:
        body.append(
            f'<path d="{_path(m, ecop.points, close=False)}" stroke="#27ae60" '
            'stroke-width="5" stroke-linecap="round" fill="none" opacity="0.8"/>'
        )
    elif ecop.kind == FULL_HULL:
        hull_pts = _outline_points(patch) if isinstance(patch, Ellipse) else patch.hull
        if len(hull_pts) >= 2:
            body.append(
                f'<path d="{_path(m, hull_pts, close=True)}" stroke="#27ae60" '
                'stroke-width="4" fill="none" opacity="0.5"/>'
            )
    elif ecop.kind == VERTEX and verdict.cop is None:
        x, y = m.to_svg(ecop.points[0])
        body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="7" stroke="#27ae60" '
            'stroke-width="3" fill="none"/>'
        )

    if verdict.cop is not None:
        x, y = m.to_svg(verdict.cop)
        body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="#8e44ad"/>')
        body.append(
            f'<text x="{_fmt(x + 10.0)}" y="{_fmt(y - 10.0)}" font-family="monospace" '
            f'font-size="16" fill="#8e44ad">f_N={w.f_N:.6g}</text>'
        )

    regime = verdict.regime.kind if verdict.regime is not None else "unsatisfied"
    body.append(
        '<text x="20" y="34" font-family="monospace" font-size="18" '
        f'fill="#2c3e50">{escape(name)}: {regime}</text>'
    )

    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{int(VIEW)}" height="{int(VIEW)}" '
        f'viewBox="0 0 {int(VIEW)} {int(VIEW)}">\n'
        f'<rect width="{int(VIEW)}" height="{int(VIEW)}" fill="#ffffff"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"
