"""Contact verdicts for planar patches: feasibility, regimes, synthesis.

A (patch, wrench, twist) triple satisfies the contact condition when the
normal wrench part lies in the patch cone, the normal twist part lies in the
dual cone, and the two are orthogonal. This module evaluates that condition,
names the physical regime (resting, separating, tipping, inactive), computes
the zero-velocity line and the set-valued center of pressure, and constructs
an explicit atom distribution realizing any satisfiable wrench.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    Patch,
    Polygon,
    SupportSet,
    _freeze,
    as_vec2,
    contains_region,
    diameter,
    perp,
    support,
)
from .fields import ForceDistribution, Twist, Wrench, center_of_pressure
from .cones import HomVec3, PatchCone, complementarity_residual, in_dual, in_primal

SEPARATING = "separating"
RESTING = "resting"
TIPPING = "tipping"
INACTIVE = "inactive"


class NotComplementary(ValueError):
    """Raised when an operation requires a satisfied contact condition."""


class SynthesisFailure(RuntimeError):
    """No realizing atom pair was found within the search budget."""


@dataclass(frozen=True, eq=False)
class ZeroLine:
    """Oriented line where the normal velocity field vanishes.

    The field is positive on the side the unit ``normal`` points into;
    ``offset`` is the signed distance of the line from the origin along it.
    """

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = as_vec2(self.normal)
        if abs(float(n @ n) - 1.0) > 1e-12:
            raise ValueError("zero-line normal must be a unit vector")
        object.__setattr__(self, "normal", _freeze(n))
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def direction(self) -> np.ndarray:
        """Unit tangent along the line."""
        return perp(self.normal)

    def signed_distance(self, p) -> float:
        p = np.asarray(p, dtype=float)
        return float(p @ self.normal) - self.offset

    def point_at(self, s: float) -> np.ndarray:
        return self.offset * self.normal + s * self.direction


@dataclass(frozen=True)
class Regime:
    """Physical regime label plus whether the tangential motion is nonzero."""

    kind: str
    tangential_motion: bool


@dataclass(frozen=True, eq=False)
class Verdict:
    """Outcome of the planar contact check.

    ``regime`` is None when the condition is not satisfied (the taxonomy only
    applies to solutions); ``cop`` is None when the net normal force vanishes.
    """

    primal_ok: bool
    dual_ok: bool
    residual: float
    satisfied: bool
    regime: Optional[Regime]
    cop: Optional[np.ndarray]
    zero_line: Optional[ZeroLine]
    extended_cop: SupportSet


def zero_line(twist: Twist, tol: float = DEFAULT_TOL) -> Optional[ZeroLine]:
    """Line {x : <x, perp(omega_T)> = v_N}, or None for a constant field."""
    wnorm = math.hypot(twist.omega_T[0], twist.omega_T[1])
    if wnorm <= tol * max(1.0, twist.normal_part_norm):
        return None
    return ZeroLine(-perp(twist.omega_T) / wnorm + 0.0, -twist.v_N / wnorm + 0.0)


def _evaluate(patch: Patch, w: Wrench, t: Twist, tol: float):
    cone = PatchCone(patch)
    a = HomVec3.of_wrench(w)
    b = HomVec3.of_twist(t)
    primal_ok = in_primal(cone, a, tol)
    dual_ok = in_dual(cone, b, tol)
    residual = complementarity_residual(a, b)
    ok = primal_ok and dual_ok and abs(residual) <= tol * max(1.0, a.norm * b.norm)
    return a, b, primal_ok, dual_ok, residual, ok


def _regime(patch: Patch, w: Wrench, t: Twist, tol: float) -> Regime:
    scale = max(1.0, w.norm, t.norm, diameter(patch))
    band = tol * scale
    wrench_zero = w.normal_part_norm <= band
    twist_zero = t.normal_part_norm <= band
    moving = math.hypot(t.v_T[0], t.v_T[1]) > band or abs(t.omega_N) > band
    if wrench_zero and twist_zero:
        kind = INACTIVE
    elif wrench_zero:
        kind = SEPARATING
    elif twist_zero:
        kind = RESTING
    else:
        kind = TIPPING
    return Regime(kind, moving)


def check(patch: Patch, w: Wrench, t: Twist, tol: float = DEFAULT_TOL) -> Verdict:
    """Full contact verdict for a wrench/twist pair on a patch.

    Only the normal parts [m_T, f_N] and [omega_T, v_N] enter the condition;
    the tangential components are reported through the regime's motion flag.
    """
    a, b, primal_ok, dual_ok, residual, ok = _evaluate(patch, w, t, tol)
    return Verdict(
        primal_ok=primal_ok,
        dual_ok=dual_ok,
        residual=residual,
        satisfied=ok,
        regime=_regime(patch, w, t, tol) if ok else None,
        cop=center_of_pressure(w, tol * max(1.0, a.norm)),
        zero_line=zero_line(t, tol),
        extended_cop=extended_cop(patch, w, t, tol),
    )


def classify(patch: Patch, w: Wrench, t: Twist, tol: float = DEFAULT_TOL) -> Regime:
    """Regime of a satisfied pair; refuses non-complementary inputs."""
    _, _, primal_ok, dual_ok, residual, ok = _evaluate(patch, w, t, tol)
    if not ok:
        raise NotComplementary(
            "contact condition not satisfied "
            f"(primal_ok={primal_ok}, dual_ok={dual_ok}, residual={residual:.3e})"
        )
    return _regime(patch, w, t, tol)


def extended_cop(patch: Patch, w: Wrench, t: Twist, tol: float = DEFAULT_TOL) -> SupportSet:
    """Set-valued center of pressure.

    The classical point when the net normal force is nonzero; otherwise the
    face of the hull the zero-line pushes against (the whole hull for a
    twist with no tangential angular part).
    """
    wscale = max(1.0, HomVec3.of_wrench(w).norm)
    if abs(w.f_N) > tol * wscale:
        return SupportSet.vertex(-perp(w.m_T) / w.f_N + 0.0)
    d = perp(t.omega_T)
    if math.hypot(d[0], d[1]) <= tol * max(1.0, HomVec3.of_twist(t).norm):
        d = np.zeros(2)
    return support(patch, d).set


def synthesize_distribution(
    patch: Patch, w: Wrench, t: Twist, tol: float = DEFAULT_TOL
) -> ForceDistribution:
    """Atoms realizing the normal wrench part against the given twist.

    Zero, one, or two atoms suffice: none when the net force vanishes, one at
    the center of pressure when that point lies in the patch itself, and two
    on the patch boundary along a chord through the center of pressure when
    it falls in a hull notch of a nonconvex patch. Every returned atom has a
    nonnegative weight and zero normal velocity whenever its weight is
    nonzero, so the pointwise contact law holds atom by atom.
    """
    a, b, primal_ok, dual_ok, residual, ok = _evaluate(patch, w, t, tol)
    if not ok:
        raise NotComplementary(
            "cannot synthesize a distribution for a non-complementary pair "
            f"(primal_ok={primal_ok}, dual_ok={dual_ok}, residual={residual:.3e})"
        )
    if abs(w.f_N) <= tol * max(1.0, a.norm):
        return ForceDistribution.empty()
    cp = -perp(w.m_T) / w.f_N + 0.0
    if contains_region(patch, cp, tol):
        return ForceDistribution(cp.reshape(1, 2), np.array([w.f_N]))

    # CoP in the hull but not the patch: split the force over the two
    # boundary points the chord through the CoP hits. With an active twist
    # the atoms must sit on the zero line, so the chord direction is forced.
    scale = max(1.0, w.norm, t.norm, diameter(patch))
    if t.normal_part_norm > tol * scale:
        wn = math.hypot(t.omega_T[0], t.omega_T[1])
        directions = [t.omega_T / wn]
    else:
        angles = np.pi * np.arange(32) / 32.0
        directions = np.stack((np.cos(angles), np.sin(angles)), axis=1)
    for d in directions:
        pair = _chord_atoms(patch, cp, d)
        if pair is not None:
            x1, x2, alpha = pair
            return ForceDistribution(
                np.array([x1, x2]), np.array([alpha * w.f_N, (1.0 - alpha) * w.f_N])
            )
    raise SynthesisFailure(
        "no boundary chord through the center of pressure found "
        f"(cp={cp.tolist()}, directions tried={len(directions)})"
    )


def _chord_atoms(patch: Patch, c: np.ndarray, d: np.ndarray):
    """Boundary crossings of the line c + s*d bracketing s = 0.

    Returns (x_minus, x_plus, alpha) with alpha the convex coefficient
    placing c between them, or None when the line misses the patch on one
    side. Only polygon rings have notches, so only they are searched.
    """
    if not isinstance(patch, Polygon) or len(patch.vertices) < 3:
        return None
    diam = max(1.0, patch.diameter)
    eps = 1e-12 * diam
    verts = patch.vertices
    params: list[float] = []
    for i in range(len(verts)):
        av = verts[i]
        bv = verts[(i + 1) % len(verts)]
        e = bv - av
        rel = av - c
        denom = d[0] * e[1] - d[1] * e[0]
        if abs(denom) <= 1e-15 * diam:
            # parallel edge; collinear ones contribute both endpoints
            if abs(rel[0] * d[1] - rel[1] * d[0]) <= eps:
                params.append(float(rel @ d))
                params.append(float((bv - c) @ d))
            continue
        u = (rel[0] * d[1] - rel[1] * d[0]) / denom
        if -1e-9 <= u <= 1.0 + 1e-9:
            params.append(float((rel[0] * e[1] - rel[1] * e[0]) / denom))
    if not params:
        return None
    params.sort()
    lo = [s for s in params if s <= eps]
    hi = [s for s in params if s >= -eps]
    if not lo or not hi:
        return None
    s_minus, s_plus = lo[-1], hi[0]
    if s_plus - s_minus <= eps:
        return c + s_minus * d, c + s_minus * d, 1.0
    alpha = s_plus / (s_plus - s_minus)
    return c + s_minus * d, c + s_plus * d, alpha
