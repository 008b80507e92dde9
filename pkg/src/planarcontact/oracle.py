"""Brute-force pointwise verification and randomized instance generation.

The library's cone tests are closed-form; this module provides the slow,
independent route: discretize the patch, evaluate the velocity field and the
atom weights directly, and confirm the pointwise contact law sample by
sample. The generators build distributions and twists that satisfy the law
by construction, which turns the equivalence results into testable
round trips.

All randomness flows through numpy Generators seeded explicitly; only raw
uniform draws are consumed, so streams are stable across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    Ellipse,
    Patch,
    Polygon,
    bounding_box,
    boundary_points,
    contains_region_many,
    diameter,
    perp,
    support,
)
from .fields import (
    ForceDistribution,
    Twist,
    Wrench,
    integrate_wrench,
    normal_velocity_many,
)
from .cones import HomVec3, PatchCone, in_dual, in_primal, sample_primal
from . import signorini


class RejectionBudgetExceeded(RuntimeError):
    """A rejection sampler ran out of attempts (degenerate geometry)."""


@dataclass(frozen=True)
class SamplePlan:
    """How to discretize a patch for pointwise verification."""

    grid_resolution: int = 24
    include_hull_vertices: bool = True
    include_boundary_samples: int = 64
    rng_seed: int = 0

    def __post_init__(self):
        if self.grid_resolution < 2:
            raise ValueError("grid_resolution must be >= 2")
        if self.include_boundary_samples < 0:
            raise ValueError("include_boundary_samples must be >= 0")


@dataclass(frozen=True, eq=False)
class PointwiseReport:
    """Worst-case violations of the pointwise contact law on a sample cloud.

    ``min_weight`` tracks atom repulsivity, ``min_velocity`` the field sign
    over the samples, ``max_product`` the per-atom complementarity products.
    """

    sample_count: int
    atom_count: int
    atoms_in_patch_ok: bool
    repulsive_ok: bool
    nonpenetration_ok: bool
    complementarity_ok: bool
    min_weight: float
    min_velocity: float
    max_product: float
    min_velocity_at: Optional[np.ndarray]
    max_product_at: Optional[np.ndarray]

    @property
    def passed(self) -> bool:
        return (
            self.atoms_in_patch_ok
            and self.repulsive_ok
            and self.nonpenetration_ok
            and self.complementarity_ok
        )


def plan_points(patch: Patch, plan: SamplePlan, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Sample cloud of a plan: interior grid, boundary ring, hull vertices."""
    rng = np.random.default_rng(plan.rng_seed)
    lower, upper = bounding_box(patch)
    xs = np.linspace(lower[0], upper[0], plan.grid_resolution)
    ys = np.linspace(lower[1], upper[1], plan.grid_resolution)
    gx, gy = np.meshgrid(xs, ys)
    grid = np.stack((gx.ravel(), gy.ravel()), axis=1)
    grid = grid[contains_region_many(patch, grid, tol)]
    parts = [grid]
    if plan.include_boundary_samples > 0:
        parts.append(boundary_points(patch, plan.include_boundary_samples, rng.random()))
    if plan.include_hull_vertices:
        if isinstance(patch, Ellipse):
            # stand-ins for vertices: the four axis-extreme boundary points
            parts.append(boundary_points(patch, 4))
        else:
            hull = patch.hull
            parts.append(hull)
            if len(hull) >= 2:
                parts.append(0.5 * (hull + np.roll(hull, -1, axis=0)))
    return np.concatenate(parts, axis=0)


def pointwise_check(
    patch: Patch,
    dist: ForceDistribution,
    t: Twist,
    plan: Optional[SamplePlan] = None,
    tol: float = DEFAULT_TOL,
) -> PointwiseReport:
    """Verify the pointwise contact law on a discretized patch.

    Checks, in order: atoms lie in the patch; every atom weight is
    nonnegative; the normal velocity field is nonnegative over the sample
    cloud (atoms included); each atom's weight-velocity product vanishes.
    Violations are reported with their worst magnitude and location, never
    raised.
    """
    plan = plan or SamplePlan()
    pts = plan_points(patch, plan, tol)
    if len(dist) > 0:
        pts = np.concatenate((pts, dist.points), axis=0)
        atoms_ok = bool(contains_region_many(patch, dist.points, max(tol, 1e-7)).all())
        min_weight = float(dist.normal_weights.min())
    else:
        atoms_ok = True
        min_weight = 0.0

    vel = normal_velocity_many(t, pts)
    i_min = int(np.argmin(vel))
    min_velocity = float(vel[i_min])
    vel_scale = max(1.0, t.normal_part_norm) * max(1.0, diameter(patch))

    if len(dist) > 0:
        products = dist.normal_weights * normal_velocity_many(t, dist.points)
        i_max = int(np.argmax(products))
        max_product = float(products[i_max])
        max_product_at = dist.points[i_max].copy()
        prod_scale = max(1.0, float(dist.normal_weights.max())) * vel_scale
    else:
        max_product = 0.0
        max_product_at = None
        prod_scale = vel_scale

    return PointwiseReport(
        sample_count=len(pts),
        atom_count=len(dist),
        atoms_in_patch_ok=atoms_ok,
        repulsive_ok=min_weight >= -tol,
        nonpenetration_ok=min_velocity >= -tol * vel_scale,
        complementarity_ok=max_product <= tol * prod_scale,
        min_weight=min_weight,
        min_velocity=min_velocity,
        max_product=max_product,
        min_velocity_at=pts[i_min].copy(),
        max_product_at=max_product_at,
    )


def random_convex_polygon(rng, n_vertices: Optional[int] = None) -> Polygon:
    """Random convex polygon: hull of a star of random radii at sorted angles."""
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    for _ in range(100):
        n = int(n_vertices) if n_vertices is not None else int(rng.integers(3, 13))
        angles = np.sort(2.0 * math.pi * rng.random(n))
        radii = 0.3 + 1.2 * rng.random(n)
        center = -2.0 + 4.0 * rng.random(2)
        pts = center + radii[:, None] * np.stack((np.cos(angles), np.sin(angles)), axis=1)
        hull = Polygon(pts).hull
        if len(hull) >= 3:
            return Polygon(hull)
    raise RejectionBudgetExceeded("could not draw a nondegenerate convex polygon")


def random_ellipse(rng) -> Ellipse:
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    center = -2.0 + 4.0 * rng.random(2)
    axes = 0.3 + 1.7 * rng.random(2)
    rotation = math.pi * rng.random()
    return Ellipse(center, axes, rotation)


def random_points_in_patch(patch: Patch, n: int, rng: np.random.Generator) -> np.ndarray:
    """n points of the patch region (not just the hull), exactly n rows."""
    if isinstance(patch, Ellipse):
        theta = 2.0 * math.pi * rng.random(n)
        r = np.sqrt(rng.random(n))
        local = np.stack(
            (patch.semi_axes[0] * r * np.cos(theta), patch.semi_axes[1] * r * np.sin(theta)),
            axis=1,
        )
        return patch.center + local @ patch.rot_matrix.T
    verts = patch.vertices
    if len(verts) == 1:
        return np.repeat(verts, n, axis=0)
    if len(verts) == 2:
        tpar = rng.random(n)
        return verts[0] + tpar[:, None] * (verts[1] - verts[0])
    lower, upper = bounding_box(patch)
    span = upper - lower
    got: list[np.ndarray] = []
    have = 0
    for _ in range(200):
        cand = lower + span * rng.random((max(4 * n, 64), 2))
        cand = cand[contains_region_many(patch, cand, 0.0)]
        if len(cand):
            got.append(cand)
            have += len(cand)
        if have >= n:
            return np.concatenate(got, axis=0)[:n]
    raise RejectionBudgetExceeded(f"could not place {n} points in the patch region")


def random_repulsive_instance(patch: Patch, seed: int) -> tuple[ForceDistribution, Wrench]:
    """1 to 8 random nonnegative atoms in the patch plus their wrench."""
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 9))
    pts = random_points_in_patch(patch, k, rng)
    weights = 2.0 * rng.random(k)
    dist = ForceDistribution(pts, weights)
    return dist, integrate_wrench(dist)


def _random_unit(rng: np.random.Generator) -> np.ndarray:
    theta = 2.0 * math.pi * rng.random()
    return np.array([math.cos(theta), math.sin(theta)])


def _face_atoms(face, rng: np.random.Generator) -> np.ndarray:
    """One or two atom sites on a support face (its vertices)."""
    pts = face.points
    if len(pts) == 1 or rng.random() < 0.5:
        return pts[:1].copy()
    return pts.copy()


def random_complementary_instance(
    patch: Patch, seed: int
) -> tuple[ForceDistribution, Twist, Wrench]:
    """Distribution/twist pair satisfying the contact law by construction.

    Three families: resting (zero twist, atoms anywhere), separating (empty
    distribution, field positive over the hull), and tipping (zero line
    tangent to the hull, atoms on the touching face). Tangential velocity
    components are sprinkled in randomly; they do not affect the law.
    """
    rng = np.random.default_rng(seed)
    family = int(rng.integers(0, 3))
    v_T = (0.0, 0.0)
    omega_N = 0.0
    if rng.random() < 0.5:
        v_T = tuple(-1.5 + 3.0 * rng.random(2))
        omega_N = -1.0 + 2.0 * rng.random()

    if family == 0:  # resting
        k = int(rng.integers(1, 7))
        pts = random_points_in_patch(patch, k, rng)
        weights = 0.1 + 1.9 * rng.random(k)
        dist = ForceDistribution(pts, weights)
        twist = Twist(v_T=v_T, omega_N=omega_N)
        return dist, twist, integrate_wrench(dist)

    if family == 1:  # separating
        omega_T = np.zeros(2) if rng.random() < 0.2 else -1.5 + 3.0 * rng.random(2)
        gap = (0.1 + 1.4 * rng.random()) * max(1.0, diameter(patch))
        v_N = support(patch, perp(omega_T)).value + gap
        dist = ForceDistribution.empty()
        twist = Twist(omega_T=omega_T, omega_N=omega_N, v_T=v_T, v_N=v_N)
        return dist, twist, integrate_wrench(dist)

    # tipping: zero line along a supporting line of the hull
    u = _random_unit(rng)
    if isinstance(patch, Polygon) and len(patch.vertices) == 2 and rng.random() < 0.5:
        # segment patch: make the zero line collinear with the segment
        edge = patch.vertices[1] - patch.vertices[0]
        u = perp(edge) / np.linalg.norm(edge)
        if rng.random() < 0.5:
            u = -u
    s = 0.2 + 1.8 * rng.random()
    value, face = support(patch, u)
    omega_T = -s * perp(u)
    v_N = s * value
    sites = _face_atoms(face, rng)
    weights = 0.2 + 1.8 * rng.random(len(sites))
    dist = ForceDistribution(sites, weights)
    twist = Twist(omega_T=omega_T, omega_N=omega_N, v_T=v_T, v_N=v_N)
    return dist, twist, integrate_wrench(dist)


def random_boundary_pair(patch: Patch, seed: int) -> tuple[Wrench, Twist]:
    """Zero-residual pair of cone boundary elements.

    The wrench's center of pressure sits on the face where a supporting
    zero line touches the hull, so the pairing is orthogonal by
    construction. Occasionally one side degenerates to the cone apex.
    """
    rng = np.random.default_rng(seed)
    u = _random_unit(rng)
    value, face = support(patch, u)
    pts = face.points
    if len(pts) == 2:
        lam = rng.random()
        c = pts[0] + lam * (pts[1] - pts[0])
    else:
        c = pts[0]
    f_N = 0.0 if rng.random() < 0.125 else 0.2 + 1.8 * rng.random()
    w = Wrench(m_T=f_N * perp(c), f_N=f_N)
    if rng.random() < 0.125:
        t = Twist()
    else:
        s = 0.2 + 1.8 * rng.random()
        t = Twist(omega_T=-s * perp(u), v_N=s * value)
    return w, t


def random_dual_element(patch: Patch, rng: np.random.Generator) -> HomVec3:
    """Random element of the dual cone, boundary included."""
    omega = np.zeros(2) if rng.random() < 0.125 else -2.0 + 4.0 * rng.random(2)
    slack = 0.0 if rng.random() < 1.0 / 3.0 else 2.0 * rng.random() * max(1.0, diameter(patch))
    v_N = support(patch, perp(omega)).value + slack
    return HomVec3(omega, v_N)


def dense_samples(patch: Patch, n: int, seed: int = 0) -> np.ndarray:
    """At least n points of the patch plus its hull vertices and boundary.

    Interior points are generated intrinsically (hull-vertex mixtures or a
    mapped disk), so the count never depends on rejection luck. Because the
    minimum of an affine field over the hull is attained at a vertex (or on
    the ellipse boundary), the returned cloud pins that minimum tightly.
    """
    rng = np.random.default_rng(seed)
    if isinstance(patch, Ellipse):
        interior = random_points_in_patch(patch, n, rng)
        ring = boundary_points(patch, max(n, 1024))
        return np.concatenate((interior, ring), axis=0)
    hull = patch.hull
    if len(hull) == 1:
        return np.repeat(hull, n, axis=0)
    if len(hull) == 2:
        tpar = np.linspace(0.0, 1.0, n)
        interior = hull[0] + tpar[:, None] * (hull[1] - hull[0])
        return np.concatenate((interior, hull), axis=0)
    weights = -np.log1p(-rng.random((n, len(hull))))
    weights /= weights.sum(axis=1, keepdims=True)
    interior = weights @ hull
    ring = boundary_points(patch, max(1024, n // 4))
    return np.concatenate((interior, ring, hull), axis=0)


def dual_minimum(t: Twist, samples: np.ndarray) -> float:
    """Minimum of the normal velocity field over a fixed sample cloud."""
    return float(normal_velocity_many(t, samples).min())


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    passed: int
    failed: int
    worst: float


@dataclass(frozen=True)
class SuiteReport:
    entries: tuple

    @property
    def all_passed(self) -> bool:
        return all(e.failed == 0 for e in self.entries)


def run_property_suite(
    patch: Optional[Patch], seed: int, count: int, tol: float = DEFAULT_TOL
) -> SuiteReport:
    """Run the full randomized property suite against one patch.

    When no patch is given, a fresh random convex polygon or ellipse is
    drawn per instance from the seed. Returns per-suite pass/fail counts
    with the worst observed violation or residual.
    """
    if count < 1:
        raise ValueError("count must be >= 1")

    def pick_patch(i: int) -> Patch:
        if patch is not None:
            return patch
        sub = np.random.default_rng(seed * 1_000_003 + i)
        return random_ellipse(sub) if sub.random() < 0.2 else random_convex_polygon(sub)

    patches = [pick_patch(i) for i in range(count)]
    entries = []

    # repulsive atoms integrate into the cone
    passed = failed = 0
    worst = 0.0
    for i, p in enumerate(patches):
        _, w = random_repulsive_instance(p, seed + 7_001 + i)
        cone = PatchCone(p)
        ok = in_primal(cone, HomVec3.of_wrench(w), tol)
        violation = 0.0
        if not ok:
            violation = max(
                abs(w.f_N) if w.f_N < 0 else 0.0,
                float(np.linalg.norm(w.m_T)) if abs(w.f_N) <= tol else 0.0,
            )
            violation = max(violation, tol)
        worst = max(worst, violation)
        passed, failed = passed + ok, failed + (not ok)
    entries.append(SuiteEntry("repulsive-wrench-membership", passed, failed, worst))

    # cone elements synthesize back to themselves
    passed = failed = 0
    worst = 0.0
    for i, p in enumerate(patches):
        h = sample_primal(PatchCone(p), seed + 11_001 + i, 1)[0]
        w = Wrench(m_T=h.tangential, f_N=h.normal)
        dist = signorini.synthesize_distribution(p, w, Twist(), tol)
        back = integrate_wrench(dist)
        err = math.hypot(*(back.m_T - w.m_T)) + abs(back.f_N - w.f_N)
        rel = err / max(1.0, h.norm)
        ok = rel <= 1e-9 and bool(np.all(dist.normal_weights >= 0.0))
        worst = max(worst, rel)
        passed, failed = passed + ok, failed + (not ok)
    entries.append(SuiteEntry("synthesis-round-trip", passed, failed, worst))

    # closed-form dual membership agrees with brute-force field minima
    passed = failed = 0
    worst = 0.0
    for i, p in enumerate(patches):
        sub = np.random.default_rng(seed + 13_001 + i)
        omega = -2.0 + 4.0 * sub.random(2)
        v_N = -3.0 + 6.0 * sub.random() * max(1.0, diameter(p))
        t = Twist(omega_T=omega, v_N=v_N)
        h = HomVec3(omega, v_N)
        scale = max(1.0, h.norm) * max(1.0, diameter(p))
        fast = in_dual(PatchCone(p), h, tol)
        slow = dual_minimum(t, dense_samples(p, 4096, seed + i)) >= -tol * scale
        ok = fast == slow
        if not ok:
            worst = max(worst, abs(dual_minimum(t, dense_samples(p, 4096, seed + i))))
        passed, failed = passed + ok, failed + (not ok)
    entries.append(SuiteEntry("nonpenetration-equivalence", passed, failed, worst))

    # constructed complementary instances satisfy the full check
    passed = failed = 0
    worst = 0.0
    for i, p in enumerate(patches):
        dist, t, w = random_complementary_instance(p, seed + 17_001 + i)
        verdict = signorini.check(p, w, t, tol)
        scale = max(1.0, HomVec3.of_wrench(w).norm * HomVec3.of_twist(t).norm)
        worst = max(worst, abs(verdict.residual) / scale)
        ok = verdict.satisfied
        passed, failed = passed + ok, failed + (not ok)
    entries.append(SuiteEntry("complementary-forward", passed, failed, worst))

    # boundary pairs admit pointwise-valid distributions
    passed = failed = 0
    worst = 0.0
    for i, p in enumerate(patches):
        w, t = random_boundary_pair(p, seed + 23_001 + i)
        dist = signorini.synthesize_distribution(p, w, t, tol)
        report = pointwise_check(p, dist, t, SamplePlan(rng_seed=seed + i), tol)
        worst = max(worst, abs(report.max_product))
        ok = report.passed
        passed, failed = passed + ok, failed + (not ok)
    entries.append(SuiteEntry("boundary-pair-synthesis", passed, failed, worst))

    return SuiteReport(tuple(entries))
