"""Planar convex geometry for contact patches.

Patches come in two shapes: polygons (possibly nonconvex; one or two vertices
degenerate to point and segment patches) and ellipses. Queries that only make
sense on convex sets (support functions, containment) act on the convex hull;
the original vertex ring is preserved because force placement may need the
nonconvex boundary.

Tolerances are relative: a user-facing ``tol`` is scaled by the patch
diameter before being used as an absolute margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

import numpy as np

DEFAULT_TOL = 1e-9

VERTEX = "vertex"
SEGMENT = "segment"
FULL_HULL = "full_hull"


class InvalidPatch(ValueError):
    """Patch construction invariants were violated."""


def as_vec2(v) -> np.ndarray:
    """Validate and convert a planar vector; rejects NaN/Inf and bad shapes."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (2,):
        raise ValueError(f"expected a 2-vector, got shape {arr.shape}")
    if not (math.isfinite(arr[0]) and math.isfinite(arr[1])):
        raise ValueError("vector components must be finite")
    return arr


def perp(v) -> np.ndarray:
    """Rotate by -pi/2 about the plane normal: [a, b] -> [b, -a].

    Accepts a single 2-vector or an (n, 2) array. Applying perp twice
    negates; four times is the identity.
    """
    arr = np.asarray(v, dtype=float)
    return np.stack((arr[..., 1], -arr[..., 0]), axis=-1)


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class Polygon:
    """Polygonal patch given by an ordered vertex ring (not necessarily convex).

    One vertex is a point patch, two a segment patch. Consecutive duplicate
    vertices (cyclically) are rejected; non-adjacent repeats are allowed and
    collapse in the hull.
    """

    vertices: np.ndarray

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 1:
            raise InvalidPatch("polygon needs an (n, 2) vertex array with n >= 1")
        if not np.all(np.isfinite(verts)):
            raise InvalidPatch("polygon vertices must be finite")
        if len(verts) > 1:
            nxt = np.roll(verts, -1, axis=0)
            if np.any(np.all(verts == nxt, axis=1)):
                raise InvalidPatch("duplicate consecutive vertices")
        object.__setattr__(self, "vertices", _freeze(verts))

    @cached_property
    def hull(self) -> np.ndarray:
        """Counterclockwise convex hull, collinear interior points removed."""
        return _monotone_chain(self.vertices)

    @cached_property
    def diameter(self) -> float:
        hull = self.hull
        if len(hull) == 1:
            return 0.0
        diff = hull[:, None, :] - hull[None, :, :]
        return float(np.sqrt((diff * diff).sum(axis=2).max()))

    @cached_property
    def perp_patch(self) -> "Polygon":
        """Image of the patch under the perp rotation."""
        return Polygon(perp(self.vertices))

    @cached_property
    def is_convex(self) -> bool:
        """Whether the vertex ring carries the same point set as the hull.

        Rings with reflex or hull-interior vertices are nonconvex; a ring
        with an extra collinear vertex also reports nonconvex, which only
        costs the region tests their convex shortcut.
        """
        if len(self.vertices) != len(self.hull):
            return False
        return {tuple(v) for v in self.vertices} == {tuple(v) for v in self.hull}


@dataclass(frozen=True, eq=False)
class Ellipse:
    """Elliptical patch: center, strictly positive semi-axes, rotation (rad)."""

    center: np.ndarray
    semi_axes: np.ndarray
    rotation: float = 0.0

    def __post_init__(self):
        try:
            center = as_vec2(self.center)
            axes = as_vec2(self.semi_axes)
        except ValueError as exc:
            raise InvalidPatch(str(exc)) from exc
        if not (axes[0] > 0.0 and axes[1] > 0.0):
            raise InvalidPatch("ellipse semi-axes must be strictly positive")
        rot = float(self.rotation)
        if not math.isfinite(rot):
            raise InvalidPatch("ellipse rotation must be finite")
        object.__setattr__(self, "center", _freeze(center))
        object.__setattr__(self, "semi_axes", _freeze(axes))
        object.__setattr__(self, "rotation", rot)

    @cached_property
    def rot_matrix(self) -> np.ndarray:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return _freeze(np.array([[c, -s], [s, c]]))

    @property
    def diameter(self) -> float:
        return 2.0 * float(max(self.semi_axes))

    @cached_property
    def perp_patch(self) -> "Ellipse":
        # perp is the rotation by -pi/2, so it maps ellipse to ellipse.
        return Ellipse(perp(self.center), self.semi_axes, self.rotation - math.pi / 2.0)


Patch = Union[Polygon, Ellipse]


class SupportResult(NamedTuple):
    value: float
    set: "SupportSet"


@dataclass(frozen=True, eq=False)
class SupportSet:
    """Maximizing face of a linear functional over a convex patch hull.

    ``kind`` is one of "vertex", "segment", "full_hull"; ``points`` holds the
    face vertices (one, two, or none for the full hull).
    """

    kind: str
    points: np.ndarray

    @classmethod
    def vertex(cls, p) -> "SupportSet":
        return cls(VERTEX, _freeze(np.asarray(p, dtype=float).reshape(1, 2)))

    @classmethod
    def segment(cls, a, b) -> "SupportSet":
        pts = np.array([a, b], dtype=float)
        if np.all(pts[0] == pts[1]):
            raise ValueError("segment endpoints must be distinct")
        return cls(SEGMENT, _freeze(pts))

    @classmethod
    def full_hull(cls) -> "SupportSet":
        return cls(FULL_HULL, _freeze(np.zeros((0, 2))))

    def distance_to(self, p) -> float:
        """Distance from a point to the face (full hull counts as distance 0)."""
        p = np.asarray(p, dtype=float)
        if self.kind == FULL_HULL:
            return 0.0
        if self.kind == VERTEX:
            return float(np.linalg.norm(p - self.points[0]))
        return point_segment_distance(p, self.points[0], self.points[1])


def _monotone_chain(points: np.ndarray) -> np.ndarray:
    """Counterclockwise convex hull via the monotone chain.

    Vertices are sorted lexicographically (ties included), duplicates and
    collinear boundary points dropped; output starts at the lexicographic
    minimum, so it is deterministic for a given vertex multiset.
    """
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    if len(pts) <= 1:
        return _freeze(pts.reshape(-1, 2))

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return _freeze(np.array(hull))


def convex_hull(patch: Patch):
    """Convex hull of a patch.

    Polygons return the counterclockwise hull vertex array (degenerate hulls
    come back with one or two vertices). Ellipses are their own hull and are
    returned as-is; use support/contains for queries against them.
    """
    if isinstance(patch, Ellipse):
        return patch
    return patch.hull


def diameter(patch: Patch) -> float:
    """Max pairwise hull distance; 2*max(semi-axes) for ellipses."""
    return patch.diameter


def support(patch: Patch, d) -> SupportResult:
    """Support value and maximizing face of the patch hull in direction d.

    The zero direction returns the full hull with value 0. For an ellipse and
    d != 0 the face is always a single boundary point.
    """
    d = np.asarray(d, dtype=float)
    if d[0] == 0.0 and d[1] == 0.0:
        return SupportResult(0.0, SupportSet.full_hull())
    if isinstance(patch, Ellipse):
        return _ellipse_support(patch, d)
    return _polygon_support(patch, d)


def _ellipse_support(patch: Ellipse, d: np.ndarray) -> SupportResult:
    a, b = patch.semi_axes
    local = patch.rot_matrix.T @ d
    w = math.hypot(a * local[0], b * local[1])
    value = float(patch.center @ d) + w
    local_pt = np.array([a * a * local[0], b * b * local[1]]) / w
    point = patch.center + patch.rot_matrix @ local_pt
    return SupportResult(value, SupportSet.vertex(point))


def _polygon_support(patch: Polygon, d: np.ndarray) -> SupportResult:
    hull = patch.hull
    vals = hull @ d
    vmax = float(vals.max())
    spread = vmax - float(vals.min())
    tie = 1e-12 * max(spread, abs(vmax))
    tied = hull[vmax - vals <= tie]
    if len(tied) == 1:
        return SupportResult(vmax, SupportSet.vertex(tied[0]))
    # Maximizing face traversed in hull (counterclockwise) order: the face
    # runs along -perp(d), i.e. descending projection onto perp(d).
    proj = tied @ perp(d)
    first = tied[int(np.argmax(proj))]
    last = tied[int(np.argmin(proj))]
    if np.all(first == last):
        return SupportResult(vmax, SupportSet.vertex(first))
    return SupportResult(vmax, SupportSet.segment(first, last))


def point_segment_distance(p, a, b) -> float:
    """Euclidean distance from p to the closed segment [a, b]."""
    p = np.asarray(p, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.linalg.norm(p - a))
    t = float(np.clip((p - a) @ ab / denom, 0.0, 1.0))
    return float(np.linalg.norm(p - (a + t * ab)))


def _containment_margin(patch: Patch, tol: float) -> float:
    # Degenerate point patches have zero diameter; fall back to absolute tol
    # so honest rounding error is not rejected.
    diam = patch.diameter
    return tol * diam if diam > 0.0 else tol


def contains(patch: Patch, p, tol: float = DEFAULT_TOL) -> bool:
    """Whether p lies in the patch hull inflated by tol*diameter."""
    p = as_vec2(p)
    margin = _containment_margin(patch, tol)
    if isinstance(patch, Ellipse):
        return _ellipse_distance_outside(patch, p) <= margin
    hull = patch.hull
    if len(hull) == 1:
        return float(np.linalg.norm(p - hull[0])) <= margin
    if len(hull) == 2:
        return point_segment_distance(p, hull[0], hull[1]) <= margin
    edges = np.roll(hull, -1, axis=0) - hull
    cross = edges[:, 0] * (p[1] - hull[:, 1]) - edges[:, 1] * (p[0] - hull[:, 0])
    lengths = np.linalg.norm(edges, axis=1)
    return bool(np.all(cross >= -margin * lengths))


def contains_many(patch: Patch, pts: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized hull containment for an (n, 2) point array."""
    pts = np.asarray(pts, dtype=float)
    margin = _containment_margin(patch, tol)
    if isinstance(patch, Ellipse):
        local = (pts - patch.center) @ patch.rot_matrix
        a, b = patch.semi_axes
        quad = (local[:, 0] / a) ** 2 + (local[:, 1] / b) ** 2
        out = quad <= 1.0
        for i in np.flatnonzero(~out):
            out[i] = _ellipse_distance_outside(patch, pts[i]) <= margin
        return out
    hull = patch.hull
    if len(hull) == 1:
        return np.linalg.norm(pts - hull[0], axis=1) <= margin
    if len(hull) == 2:
        return np.array([point_segment_distance(p, hull[0], hull[1]) <= margin for p in pts])
    edges = np.roll(hull, -1, axis=0) - hull
    lengths = np.linalg.norm(edges, axis=1)
    rel = pts[:, None, :] - hull[None, :, :]
    cross = edges[None, :, 0] * rel[:, :, 1] - edges[None, :, 1] * rel[:, :, 0]
    return np.all(cross >= -margin * lengths[None, :], axis=1)


def contains_region(patch: Patch, p, tol: float = DEFAULT_TOL) -> bool:
    """Whether p lies in the patch itself, not just its hull.

    For nonconvex polygons this is the even-odd interior of the original
    vertex ring, inflated by the usual tol*diameter margin. Convex shapes
    coincide with ``contains``.
    """
    return bool(contains_region_many(patch, np.asarray(p, dtype=float).reshape(1, 2), tol)[0])


def contains_region_many(patch: Patch, pts: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized region containment for an (n, 2) point array."""
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    if isinstance(patch, Ellipse) or len(patch.vertices) <= 2 or patch.is_convex:
        return contains_many(patch, pts, tol)
    verts = patch.vertices
    margin = _containment_margin(patch, tol)
    a = verts
    b = np.roll(verts, -1, axis=0)
    ay, by = a[:, 1][None, :], b[:, 1][None, :]
    py = pts[:, 1][:, None]
    straddles = (ay > py) != (by > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (py - ay) / (by - ay)
        xi = a[:, 0][None, :] + t * (b[:, 0] - a[:, 0])[None, :]
        crossed = straddles & (pts[:, 0][:, None] < xi)
    inside = (crossed.sum(axis=1) % 2).astype(bool)
    if margin > 0.0 and not inside.all():
        inside[~inside] = _segments_distance_many(pts[~inside], a, b) <= margin
    return inside


def _segments_distance_many(pts: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Min distance from each point to a family of segments (a[i], b[i])."""
    if len(pts) == 0:
        return np.zeros(0)
    ab = b - a
    denom = (ab * ab).sum(axis=1)
    denom = np.where(denom == 0.0, 1.0, denom)
    rel = pts[:, None, :] - a[None, :, :]
    t = np.clip((rel * ab[None, :, :]).sum(axis=2) / denom[None, :], 0.0, 1.0)
    closest = a[None, :, :] + t[:, :, None] * ab[None, :, :]
    d = np.linalg.norm(pts[:, None, :] - closest, axis=2)
    return d.min(axis=1)


def boundary_points(patch: Patch, n: int, phase: float = 0.0) -> np.ndarray:
    """n points spread uniformly along the patch boundary.

    Polygons are parameterized by arc length over the original vertex ring
    (equal to the hull ring when convex); ellipses by angle. ``phase`` in
    [0, 1) shifts every sample by that fraction of a step, so independent
    draws do not all land on the same lattice.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    params = (np.arange(n) + float(phase)) / n
    if isinstance(patch, Ellipse):
        theta = 2.0 * math.pi * params
        local = np.stack(
            (patch.semi_axes[0] * np.cos(theta), patch.semi_axes[1] * np.sin(theta)), axis=1
        )
        return patch.center + local @ patch.rot_matrix.T
    verts = patch.vertices
    if len(verts) == 1:
        return np.repeat(verts, n, axis=0)
    a = verts
    b = np.roll(verts, -1, axis=0)
    lengths = np.linalg.norm(b - a, axis=1)
    cum = np.concatenate(([0.0], np.cumsum(lengths)))
    s = params * cum[-1]
    idx = np.minimum(np.searchsorted(cum, s, side="right") - 1, len(lengths) - 1)
    local_t = (s - cum[idx]) / lengths[idx]
    return a[idx] + local_t[:, None] * (b[idx] - a[idx])


def _ellipse_distance_outside(patch: Ellipse, p: np.ndarray) -> float:
    """Distance from p to the ellipse (0 for points inside or on it)."""
    q = patch.rot_matrix.T @ (p - patch.center)
    a, b = float(patch.semi_axes[0]), float(patch.semi_axes[1])
    quad = (q[0] / a) ** 2 + (q[1] / b) ** 2
    if quad <= 1.0:
        return 0.0

    # Closest boundary point solves x = a^2 q0/(t+a^2), y = b^2 q1/(t+b^2)
    # for the unique root t > 0 of the on-ellipse condition; the residual is
    # strictly decreasing in t, so bisection is safe.
    def resid(t):
        return (a * q[0] / (t + a * a)) ** 2 + (b * q[1] / (t + b * b)) ** 2 - 1.0

    lo = 0.0
    hi = max(a, b) * float(np.linalg.norm(q)) + max(a, b) ** 2
    while resid(hi) > 0.0:
        hi *= 2.0
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if resid(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    closest = np.array([a * a * q[0] / (t + a * a), b * b * q[1] / (t + b * b)])
    return float(np.linalg.norm(q - closest))


def distance_to_hull_boundary(patch: Patch, p) -> float:
    """Distance from p to the boundary of the patch hull (inside or out)."""
    p = as_vec2(p)
    if isinstance(patch, Ellipse):
        q = patch.rot_matrix.T @ (p - patch.center)
        a, b = patch.semi_axes
        quad = (q[0] / a) ** 2 + (q[1] / b) ** 2
        if quad > 1.0:
            return _ellipse_distance_outside(patch, p)
        # First-order distance from the level-set residual; exact enough for
        # near-boundary measurements, which is the only interior use.
        grad = np.array([2.0 * q[0] / a**2, 2.0 * q[1] / b**2])
        gnorm = float(np.linalg.norm(grad))
        if gnorm == 0.0:
            return float(min(a, b))
        return abs(quad - 1.0) / gnorm
    hull = patch.hull
    if len(hull) == 1:
        return float(np.linalg.norm(p - hull[0]))
    segs = zip(hull, np.roll(hull, -1, axis=0))
    return min(point_segment_distance(p, s, e) for s, e in segs)


def bounding_box(patch: Patch) -> tuple[np.ndarray, np.ndarray]:
    """Axis-aligned bounding box of the patch hull as (lower, upper)."""
    if isinstance(patch, Ellipse):
        hx = support(patch, [1.0, 0.0]).value
        lx = -support(patch, [-1.0, 0.0]).value
        hy = support(patch, [0.0, 1.0]).value
        ly = -support(patch, [0.0, -1.0]).value
        return np.array([lx, ly]), np.array([hx, hy])
    hull = patch.hull
    return hull.min(axis=0), hull.max(axis=0)
