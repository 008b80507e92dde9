import math

import numpy as np
import pytest

from planarcontact import (
    ForceDistribution,
    Twist,
    Wrench,
    center_of_pressure,
    contains,
    integrate_wrench,
    normal_velocity,
    normal_velocity_many,
    random_points_in_patch,
    tangential_velocity,
    varignon_shift,
    zmp,
)


class TestNormalVelocity:
    def test_spot_values(self):
        t = Twist(omega_T=[1.0, 0.0], v_N=1.0)
        assert normal_velocity(t, [0.0, -1.0]) == 0.0
        assert normal_velocity(t, [0.0, 1.0]) == 2.0

    def test_constant_field_without_spin(self):
        t = Twist(v_N=3.5)
        rng = np.random.default_rng(0)
        for _ in range(10):
            assert normal_velocity(t, rng.normal(size=2)) == 3.5

    def test_symbolic_expansion(self):
        # v_N + x2*w1 - x1*w2 written out by hand
        rng = np.random.default_rng(1)
        for _ in range(40):
            w1, w2, v = rng.normal(size=3)
            x = rng.normal(size=2)
            t = Twist(omega_T=[w1, w2], v_N=v)
            expected = v + x[1] * w1 - x[0] * w2
            assert abs(normal_velocity(t, x) - expected) < 1e-12

    def test_affine_in_position(self):
        rng = np.random.default_rng(2)
        t = Twist(omega_T=rng.normal(size=2), v_N=rng.normal())
        x1, x2 = rng.normal(size=2), rng.normal(size=2)
        for alpha in (0.0, 0.25, 0.7, 1.0):
            mix = alpha * x1 + (1 - alpha) * x2
            expected = alpha * normal_velocity(t, x1) + (1 - alpha) * normal_velocity(t, x2)
            assert abs(normal_velocity(t, mix) - expected) < 1e-12

    def test_linear_in_twist(self):
        rng = np.random.default_rng(3)
        x = rng.normal(size=2)
        w1, w2 = rng.normal(size=2), rng.normal(size=2)
        v1, v2 = rng.normal(), rng.normal()
        a, b = 2.0, -0.7
        combined = Twist(omega_T=a * w1 + b * w2, v_N=a * v1 + b * v2)
        expected = a * normal_velocity(Twist(omega_T=w1, v_N=v1), x) + b * normal_velocity(
            Twist(omega_T=w2, v_N=v2), x
        )
        assert abs(normal_velocity(combined, x) - expected) < 1e-12

    def test_vectorized(self):
        rng = np.random.default_rng(4)
        t = Twist(omega_T=rng.normal(size=2), v_N=rng.normal())
        pts = rng.normal(size=(25, 2))
        batch = normal_velocity_many(t, pts)
        for p, val in zip(pts, batch):
            assert abs(normal_velocity(t, p) - val) < 1e-14


def test_tangential_velocity():
    assert np.allclose(tangential_velocity(Twist(v_T=[1.0, 0.0]), [9.0, -3.0]), [1.0, 0.0])
    assert np.allclose(tangential_velocity(Twist(omega_N=1.0), [1.0, 0.0]), [0.0, 1.0])
    assert np.allclose(tangential_velocity(Twist(), [5.0, 5.0]), [0.0, 0.0])


class TestIntegrateWrench:
    def test_two_symmetric_atoms(self):
        dist = ForceDistribution([[1.0, 0.0], [-1.0, 0.0]], [2.0, 2.0])
        w = integrate_wrench(dist)
        assert w.f_N == 4.0
        assert np.allclose(w.m_T, [0.0, 0.0])

    def test_empty(self):
        w = integrate_wrench(ForceDistribution.empty())
        assert w.f_N == 0.0 and w.m_N == 0.0
        assert np.all(w.m_T == 0.0) and np.all(w.f_T == 0.0)

    def test_single_atom(self):
        w = integrate_wrench(ForceDistribution([[0.0, -1.0]], [2.0]))
        assert w.f_N == 2.0
        assert np.allclose(w.m_T, [-2.0, 0.0])

    def test_permutation_invariant(self):
        rng = np.random.default_rng(10)
        pts = rng.normal(size=(9, 2))
        wn = rng.random(9)
        wt = rng.normal(size=(9, 2))
        base = integrate_wrench(ForceDistribution(pts, wn, wt))
        for _ in range(5):
            perm = rng.permutation(9)
            other = integrate_wrench(ForceDistribution(pts[perm], wn[perm], wt[perm]))
            # compensated summation makes the sums exact, so order cannot matter
            assert np.array_equal(base.m_T, other.m_T)
            assert base.f_N == other.f_N
            assert base.m_N == other.m_N
            assert np.array_equal(base.f_T, other.f_T)

    def test_linear_in_weights(self):
        rng = np.random.default_rng(11)
        pts = rng.normal(size=(5, 2))
        wn = rng.random(5)
        w1 = integrate_wrench(ForceDistribution(pts, wn))
        w2 = integrate_wrench(ForceDistribution(pts, 3.0 * wn))
        assert np.allclose(3.0 * w1.m_T, w2.m_T)
        assert abs(3.0 * w1.f_N - w2.f_N) < 1e-12

    def test_tangential_moment(self):
        # single tangential force at lever arm: m_N = -<rho_T, perp(x)>
        dist = ForceDistribution([[1.0, 0.0]], [0.0], [[0.0, 1.0]])
        w = integrate_wrench(dist)
        assert np.allclose(w.f_T, [0.0, 1.0])
        assert w.m_N == 1.0


class TestCenterOfPressure:
    def test_spot_values(self):
        assert np.allclose(center_of_pressure(Wrench(m_T=[-2.0, 0.0], f_N=2.0)), [0.0, -1.0])
        assert np.allclose(center_of_pressure(Wrench(f_N=5.0)), [0.0, 0.0])
        assert center_of_pressure(Wrench(m_T=[0.0, 0.0], f_N=0.0)) is None

    def test_undefined_below_tolerance(self):
        assert center_of_pressure(Wrench(f_N=1e-12), 1e-9) is None
        assert center_of_pressure(Wrench(f_N=-1e-12), 1e-9) is None

    def test_zmp_is_cop(self):
        rng = np.random.default_rng(21)
        for _ in range(200):
            w = Wrench(m_T=rng.normal(size=2), f_N=rng.normal())
            a = center_of_pressure(w, 1e-9)
            b = zmp(w, 1e-9)
            if a is None:
                assert b is None
            else:
                assert a.tobytes() == b.tobytes()

    def test_in_hull_for_repulsive_distributions(self, patch_population):
        rng = np.random.default_rng(22)
        for patch in patch_population[:10]:
            pts = random_points_in_patch(patch, 6, rng)
            dist = ForceDistribution(pts, 0.1 + rng.random(6))
            cop = center_of_pressure(integrate_wrench(dist))
            assert cop is not None
            assert contains(patch, cop, 1e-9)


class TestVarignon:
    def test_spot_values(self):
        w = Wrench(m_T=[-2.0, 0.0], f_N=2.0)
        assert np.allclose(varignon_shift(w, [0.0, -1.0]), [0.0, 0.0])
        assert np.allclose(varignon_shift(w, [0.0, 0.0]), w.m_T)
        assert np.allclose(varignon_shift(Wrench(f_N=1.0), [1.0, 0.0]), [0.0, 1.0])

    def test_vanishes_at_cop(self):
        rng = np.random.default_rng(31)
        for _ in range(300):
            w = Wrench(m_T=3.0 * rng.normal(size=2), f_N=rng.normal() or 1.0)
            cop = center_of_pressure(w, 1e-9)
            if cop is None:
                continue
            shift = varignon_shift(w, cop)
            scale = max(1.0, float(np.linalg.norm(w.m_T)) + abs(w.f_N))
            assert float(np.linalg.norm(shift)) <= 1e-12 * scale


class TestForceDistribution:
    def test_rejects_negative_weights(self):
        with pytest.raises(ValueError):
            ForceDistribution([[0.0, 0.0]], [-1.0])

    def test_unchecked_allows_negative(self):
        dist = ForceDistribution.unchecked([[0.0, 0.0]], [-1.0])
        assert dist.normal_weights[0] == -1.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            ForceDistribution([[0.0, 0.0], [1.0, 1.0]], [1.0])
        with pytest.raises(ValueError):
            ForceDistribution([[0.0, 0.0]], [1.0], [[0.0, 0.0], [1.0, 0.0]])

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            ForceDistribution([[math.nan, 0.0]], [1.0])

    def test_total_and_len(self):
        dist = ForceDistribution([[0, 0], [1, 1]], [1.0, 2.5])
        assert len(dist) == 2
        assert dist.total_normal_force == 3.5


def test_twist_wrench_validation():
    with pytest.raises(ValueError):
        Twist(omega_T=[1.0, math.inf])
    with pytest.raises(ValueError):
        Wrench(f_N=math.nan)
    t = Twist(omega_T=[3.0, 4.0], v_N=12.0)
    assert abs(t.normal_part_norm - 13.0) < 1e-12
    w = Wrench(m_T=[3.0, 4.0], f_N=12.0)
    assert abs(w.normal_part_norm - 13.0) < 1e-12
