"""Twists, wrenches, discrete force distributions, and the induced fields.

A relative twist between two bodies in planar contact splits into tangential
and normal parts [omega_T, omega_N, v_T, v_N]; it induces an affine normal
velocity field over the contact plane. Dually, a force distribution over the
patch integrates to a wrench [m_T, m_N, f_T, f_N]. Distributions are finite
sets of weighted atoms, which keeps integration exact and matches the
degenerate (boundary-supported) cases that show up at tipping.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Optional

import numpy as np

from .geometry import DEFAULT_TOL, _freeze, as_vec2, perp


@dataclass(frozen=True, eq=False)
class Twist:
    """Relative spatial velocity split into tangential/normal parts."""

    omega_T: np.ndarray = (0.0, 0.0)
    omega_N: float = 0.0
    v_T: np.ndarray = (0.0, 0.0)
    v_N: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "omega_T", _freeze(as_vec2(self.omega_T)))
        object.__setattr__(self, "v_T", _freeze(as_vec2(self.v_T)))
        object.__setattr__(self, "omega_N", _finite(self.omega_N, "omega_N"))
        object.__setattr__(self, "v_N", _finite(self.v_N, "v_N"))

    @property
    def norm(self) -> float:
        return math.sqrt(
            float(self.omega_T @ self.omega_T)
            + self.omega_N**2
            + float(self.v_T @ self.v_T)
            + self.v_N**2
        )

    @property
    def normal_part_norm(self) -> float:
        """Norm of the [omega_T, v_N] triple driving the normal field."""
        return math.sqrt(float(self.omega_T @ self.omega_T) + self.v_N**2)


@dataclass(frozen=True, eq=False)
class Wrench:
    """Contact wrench split into tangential/normal parts."""

    m_T: np.ndarray = (0.0, 0.0)
    m_N: float = 0.0
    f_T: np.ndarray = (0.0, 0.0)
    f_N: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "m_T", _freeze(as_vec2(self.m_T)))
        object.__setattr__(self, "f_T", _freeze(as_vec2(self.f_T)))
        object.__setattr__(self, "m_N", _finite(self.m_N, "m_N"))
        object.__setattr__(self, "f_N", _finite(self.f_N, "f_N"))

    @property
    def norm(self) -> float:
        return math.sqrt(
            float(self.m_T @ self.m_T)
            + self.m_N**2
            + float(self.f_T @ self.f_T)
            + self.f_N**2
        )

    @property
    def normal_part_norm(self) -> float:
        """Norm of the [m_T, f_N] triple produced by the normal distribution."""
        return math.sqrt(float(self.m_T @ self.m_T) + self.f_N**2)


def _finite(x, name: str) -> float:
    val = float(x)
    if not math.isfinite(val):
        raise ValueError(f"{name} must be finite")
    return val


@dataclass(frozen=True, eq=False)
class ForceDistribution:
    """Finite set of contact atoms: point, normal weight, tangential weight.

    Normal weights must be nonnegative (repulsive contact); pass
    ``check_repulsive=False`` or use :meth:`unchecked` to build deliberately
    invalid distributions for negative tests.
    """

    points: np.ndarray
    normal_weights: np.ndarray
    tangential_weights: Optional[np.ndarray] = None
    check_repulsive: InitVar[bool] = True

    def __post_init__(self, check_repulsive: bool):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        wn = np.asarray(self.normal_weights, dtype=float).reshape(-1)
        if len(pts) != len(wn):
            raise ValueError("points and normal_weights must have equal length")
        wt = self.tangential_weights
        wt = np.zeros_like(pts) if wt is None else np.asarray(wt, dtype=float).reshape(-1, 2)
        if len(wt) != len(pts):
            raise ValueError("tangential_weights must match the atom count")
        if not (np.all(np.isfinite(pts)) and np.all(np.isfinite(wn)) and np.all(np.isfinite(wt))):
            raise ValueError("distribution atoms must be finite")
        if check_repulsive and np.any(wn < 0.0):
            raise ValueError("normal weights must be nonnegative")
        object.__setattr__(self, "points", _freeze(pts))
        object.__setattr__(self, "normal_weights", _freeze(wn))
        object.__setattr__(self, "tangential_weights", _freeze(wt))

    @classmethod
    def empty(cls) -> "ForceDistribution":
        return cls(np.zeros((0, 2)), np.zeros(0))

    @classmethod
    def unchecked(cls, points, normal_weights, tangential_weights=None) -> "ForceDistribution":
        """Skip the nonnegativity check (counterexample construction only)."""
        return cls(points, normal_weights, tangential_weights, check_repulsive=False)

    def __len__(self) -> int:
        return len(self.normal_weights)

    @property
    def total_normal_force(self) -> float:
        return math.fsum(self.normal_weights)


def normal_velocity(twist: Twist, x) -> float:
    """Normal velocity v_N + <omega_T, perp(x)> of the contact point x."""
    x = np.asarray(x, dtype=float)
    return float(twist.v_N + twist.omega_T @ perp(x))


def normal_velocity_many(twist: Twist, pts: np.ndarray) -> np.ndarray:
    """Vectorized normal velocity over an (n, 2) point array."""
    pts = np.asarray(pts, dtype=float)
    return twist.v_N + perp(pts) @ twist.omega_T


def tangential_velocity(twist: Twist, x) -> np.ndarray:
    """Tangential velocity v_T - omega_N * perp(x) of the contact point x."""
    x = np.asarray(x, dtype=float)
    return twist.v_T - twist.omega_N * perp(x)


def integrate_wrench(dist: ForceDistribution) -> Wrench:
    """Sum and moment of a discrete force distribution.

    Components are accumulated with exact (fsum) summation, so the result is
    independent of atom order.
    """
    x = dist.points
    wn = dist.normal_weights
    wt = dist.tangential_weights
    f_N = math.fsum(wn)
    m_T = (math.fsum(wn * x[:, 1]), -math.fsum(wn * x[:, 0]))
    f_T = (math.fsum(wt[:, 0]), math.fsum(wt[:, 1]))
    m_N = -math.fsum(wt[:, 0] * x[:, 1] - wt[:, 1] * x[:, 0])
    return Wrench(m_T=m_T, m_N=m_N, f_T=f_T, f_N=f_N)


def center_of_pressure(w: Wrench, tol: float = DEFAULT_TOL) -> Optional[np.ndarray]:
    """First moment of the normal distribution over its resultant.

    Undefined (None) when |f_N| <= tol; the caller decides how to treat the
    no-net-force regime.
    """
    if abs(w.f_N) <= tol:
        return None
    return -perp(w.m_T) / w.f_N + 0.0  # +0.0 normalizes -0.0 components


def varignon_shift(w: Wrench, c) -> np.ndarray:
    """Tangential moment of the same wrench taken about the point c."""
    c = as_vec2(c)
    return w.m_T - w.f_N * perp(c)


def zmp(w: Wrench, tol: float = DEFAULT_TOL) -> Optional[np.ndarray]:
    """Point where the normal distribution exerts no tangential moment.

    Shares the center-of-pressure implementation: the two points coincide.
    """
    return center_of_pressure(w, tol)
