"""The patch cone, its dual, membership tests, and complementarity pairing.

The admissible normal wrenches [m_T, f_N] of a patch P form the convex cone
spanned by homogeneous coordinates of the rotated hull: every ray through
(c_perp, 1) with c in C(P). Admissible normal twists [omega_T, v_N] live in
the dual cone, which works out to "the normal velocity field is nonnegative
over C(P)" and is decided by one support-function evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    Ellipse,
    Patch,
    Polygon,
    _freeze,
    as_vec2,
    contains,
    diameter,
    perp,
    support,
)
from .fields import Twist, Wrench, _finite


@dataclass(frozen=True, eq=False)
class HomVec3:
    """Homogeneous triple: a 2-vector plus a scalar third coordinate.

    Represents either a normal wrench part [m_T, f_N] or a normal twist part
    [omega_T, v_N].
    """

    tangential: np.ndarray = (0.0, 0.0)
    normal: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "tangential", _freeze(as_vec2(self.tangential)))
        object.__setattr__(self, "normal", _finite(self.normal, "normal"))

    @classmethod
    def of_wrench(cls, w: Wrench) -> "HomVec3":
        return cls(w.m_T, w.f_N)

    @classmethod
    def of_twist(cls, t: Twist) -> "HomVec3":
        return cls(t.omega_T, t.v_N)

    @property
    def norm(self) -> float:
        return math.sqrt(float(self.tangential @ self.tangential) + self.normal**2)

    def scaled(self, s: float) -> "HomVec3":
        return HomVec3(s * self.tangential, s * self.normal)


@dataclass(frozen=True, eq=False)
class PatchCone:
    """Cone of admissible normal wrenches of a patch.

    The rotated hull is materialized at construction so membership tests do
    no lazy work afterwards; the instance is immutable and shareable.
    """

    patch: Patch
    perp_patch: Patch = field(init=False)

    def __post_init__(self):
        pp = self.patch.perp_patch
        if isinstance(pp, Polygon):
            pp.hull  # force the cached hull now
        object.__setattr__(self, "perp_patch", pp)


def in_primal(cone: PatchCone, h: HomVec3, tol: float = DEFAULT_TOL) -> bool:
    """Membership of [m_T, f_N] in the patch cone.

    Nonnegative third coordinate, with the moment constrained to f_N-scaled
    copies of the rotated hull; the apex accepts only (near-)zero triples.
    The slack band is tol * max(1, ||h||) so boundary elements test true.
    """
    band = tol * max(1.0, h.norm)
    if h.normal > band:
        return contains(cone.perp_patch, h.tangential / h.normal, tol)
    if h.normal < -band:
        return False
    return math.hypot(h.tangential[0], h.tangential[1]) <= band


def in_dual(cone: PatchCone, h: HomVec3, tol: float = DEFAULT_TOL) -> bool:
    """Membership of [omega_T, v_N] in the dual cone.

    Equivalent to the induced normal velocity field being nonnegative over
    the hull: v_N minus the support value of the patch in direction
    perp(omega_T) must be >= 0 up to the tolerance band.
    """
    lowest = h.normal - support(cone.patch, perp(h.tangential)).value
    scale = max(1.0, h.norm) * max(1.0, diameter(cone.patch))
    return lowest >= -tol * scale


def complementarity_residual(a: HomVec3, b: HomVec3) -> float:
    """Inner product of two homogeneous triples; zero at contact solutions."""
    return float(a.tangential @ b.tangential) + a.normal * b.normal


def sample_primal(cone: PatchCone, rng_seed: int, n: int) -> list:
    """Draw n cone elements alpha * [y, 1], y inside the rotated hull.

    Roughly one draw in sixteen is the apex (alpha = 0). Only raw uniform
    doubles are consumed from the generator, so streams reproduce across
    platforms for a given seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(rng_seed)
    pp = cone.perp_patch
    out = []
    for _ in range(n):
        if rng.random() < 1.0 / 16.0:
            out.append(HomVec3((0.0, 0.0), 0.0))
            continue
        alpha = rng.uniform(1e-3, 4.0)
        y = _interior_point(pp, rng)
        out.append(HomVec3(alpha * y, alpha))
    return out


def _interior_point(patch: Patch, rng: np.random.Generator) -> np.ndarray:
    """Random point of C(patch): hull-vertex mixture or mapped disk sample."""
    if isinstance(patch, Ellipse):
        theta = 2.0 * math.pi * rng.random()
        r = math.sqrt(rng.random())
        local = patch.semi_axes * np.array([r * math.cos(theta), r * math.sin(theta)])
        return patch.center + patch.rot_matrix @ local
    hull = patch.hull
    if len(hull) == 1:
        return hull[0].copy()
    # exponential spacings normalize to convex weights
    e = -np.log1p(-rng.random(len(hull)))
    total = e.sum()
    if total <= 0.0:
        return hull[0].copy()
    return (e / total) @ hull
