import numpy as np
import pytest

from planarcontact import (
    Ellipse,
    ForceDistribution,
    HomVec3,
    PatchCone,
    Polygon,
    SamplePlan,
    Twist,
    Wrench,
    check,
    contains,
    contains_region,
    contains_region_many,
    dense_samples,
    diameter,
    dual_minimum,
    in_dual,
    in_primal,
    plan_points,
    pointwise_check,
    random_boundary_pair,
    random_complementary_instance,
    random_convex_polygon,
    random_ellipse,
    random_points_in_patch,
    random_repulsive_instance,
    run_property_suite,
    synthesize_distribution,
)


class TestSamplePlan:
    def test_defaults(self):
        plan = SamplePlan()
        assert plan.grid_resolution >= 2
        assert plan.include_hull_vertices
        assert plan.include_boundary_samples >= 0

    def test_validation(self):
        with pytest.raises(ValueError):
            SamplePlan(grid_resolution=1)
        with pytest.raises(ValueError):
            SamplePlan(include_boundary_samples=-1)

    def test_plan_points_inside(self, lshape):
        from planarcontact import contains_many

        pts = plan_points(lshape, SamplePlan(grid_resolution=16))
        assert len(pts) > 50
        # the velocity field is affine, so hull containment is what matters
        assert contains_many(lshape, pts, 1e-7).all()
        # the grid itself is filtered down to the actual region
        grid = pts[: -len(lshape.hull) * 2 - 64]
        assert contains_region_many(lshape, grid, 1e-7).all()
        # hull vertices of the L-shape must be present
        asset = {tuple(v) for v in np.round(lshape.hull, 9)}
        got = {tuple(v) for v in np.round(pts, 9)}
        assert asset <= got

    def test_plan_points_ellipse(self):
        e = Ellipse([1.0, -1.0], [2.0, 0.5], 0.3)
        pts = plan_points(e, SamplePlan(grid_resolution=12, include_boundary_samples=32))
        assert contains_region_many(e, pts, 1e-7).all()


class TestPointwiseCheck:
    def test_passes_on_tipping(self, square):
        dist = ForceDistribution([[0.0, -1.0]], [2.0])
        t = Twist(omega_T=[1.0, 0.0], v_N=1.0)
        report = pointwise_check(square, dist, t)
        assert report.passed
        assert report.atom_count == 1
        assert report.min_weight == 2.0
        assert report.max_product <= 1e-12

    def test_detects_penetration(self, square):
        # pressing atom while the whole patch approaches: product is 1
        dist = ForceDistribution([[0.0, 0.0]], [1.0])
        t = Twist(v_N=1.0)
        report = pointwise_check(square, dist, t)
        assert not report.passed
        assert not report.complementarity_ok
        assert abs(report.max_product - 1.0) < 1e-12
        assert np.allclose(report.max_product_at, [0.0, 0.0])

    def test_detects_negative_velocity(self, square):
        report = pointwise_check(square, ForceDistribution.empty(), Twist(v_N=-1.0))
        assert not report.nonpenetration_ok
        assert report.min_velocity == -1.0

    def test_empty_distribution_separating(self, square):
        report = pointwise_check(square, ForceDistribution.empty(), Twist(v_N=2.0))
        assert report.passed
        assert report.atom_count == 0
        assert report.max_product_at is None

    def test_flags_atom_outside(self, square):
        dist = ForceDistribution([[5.0, 5.0]], [1.0])
        report = pointwise_check(square, dist, Twist())
        assert not report.atoms_in_patch_ok
        assert not report.passed

    def test_flags_negative_weight(self, square):
        dist = ForceDistribution.unchecked([[0.0, 0.0]], [-0.5])
        report = pointwise_check(square, dist, Twist())
        assert not report.repulsive_ok
        assert report.min_weight == -0.5

    def test_notch_velocity_checked_in_region_only(self, lshape):
        # a zero line crossing the notch is fine as long as the region
        # stays on the nonnegative side
        u = np.array([1.0, 1.0]) / np.sqrt(2.0)
        t = Twist(omega_T=[-u[1], u[0]], v_N=3.0 / np.sqrt(2.0))
        report = pointwise_check(lshape, ForceDistribution.empty(), t)
        assert report.passed


class TestGenerators:
    def test_random_convex_polygon(self):
        rng = np.random.default_rng(100)
        for _ in range(30):
            poly = random_convex_polygon(rng)
            assert len(poly.vertices) >= 3
            assert np.array_equal(poly.vertices, poly.hull)

    def test_random_convex_polygon_seed(self):
        a = random_convex_polygon(42)
        b = random_convex_polygon(42)
        assert np.array_equal(a.vertices, b.vertices)

    def test_random_ellipse(self):
        e = random_ellipse(7)
        assert e.semi_axes.min() >= 0.3
        assert diameter(e) > 0.0

    def test_random_points_in_patch(self, patch_population):
        rng = np.random.default_rng(101)
        for patch in patch_population:
            pts = random_points_in_patch(patch, 37, rng)
            assert pts.shape == (37, 2)
            assert contains_region_many(patch, pts, 1e-9).all()

    def test_random_points_segment(self):
        seg = Polygon([[0.0, 0.0], [2.0, 2.0]])
        rng = np.random.default_rng(102)
        pts = random_points_in_patch(seg, 15, rng)
        assert np.allclose(pts[:, 0], pts[:, 1])

    def test_random_points_notch_avoided(self, lshape):
        rng = np.random.default_rng(103)
        pts = random_points_in_patch(lshape, 400, rng)
        inside_notch = (pts[:, 0] > 1.0 + 1e-9) & (pts[:, 1] > 1.0 + 1e-9)
        assert not inside_notch.any()


class TestRepulsiveInstance:
    def test_membership(self, patch_population):
        for i, patch in enumerate(patch_population):
            cone = PatchCone(patch)
            for j in range(20):
                dist, w = random_repulsive_instance(patch, 1000 * i + j)
                assert 1 <= len(dist) <= 8
                assert dist.normal_weights.min() >= 0.0
                assert in_primal(cone, HomVec3.of_wrench(w), 1e-9)

    def test_deterministic(self, square):
        d1, w1 = random_repulsive_instance(square, 5)
        d2, w2 = random_repulsive_instance(square, 5)
        assert np.array_equal(d1.points, d2.points)
        assert w1.f_N == w2.f_N


class TestComplementaryInstance:
    def test_always_satisfied(self, patch_population):
        for i, patch in enumerate(patch_population):
            for j in range(12):
                dist, t, w = random_complementary_instance(patch, 300 * i + j)
                v = check(patch, w, t)
                assert v.satisfied, (i, j, v.residual)
                report = pointwise_check(patch, dist, t)
                assert report.passed, (i, j)

    def test_all_regimes_reachable(self, square):
        kinds = set()
        for seed in range(200):
            _, t, w = random_complementary_instance(square, seed)
            v = check(square, w, t)
            if v.regime is not None:
                kinds.add(v.regime.kind)
        assert {"resting", "separating", "tipping"} <= kinds

    def test_segment_patch(self):
        seg = Polygon([[-1.0, 0.5], [1.0, -0.5]])
        for seed in range(60):
            dist, t, w = random_complementary_instance(seg, seed)
            assert check(seg, w, t).satisfied

    def test_negative_control(self, patch_population):
        # nudging the approach velocity down must break the law whenever
        # contact force is present
        broken = 0
        for i, patch in enumerate(patch_population[:10]):
            for j in range(10):
                dist, t, w = random_complementary_instance(patch, 77_000 + 100 * i + j)
                if w.f_N <= 0.01:
                    continue
                bad = Twist(
                    omega_T=t.omega_T,
                    omega_N=t.omega_N,
                    v_T=t.v_T,
                    v_N=t.v_N - 0.1 * max(1.0, diameter(patch)),
                )
                v = check(patch, w, bad)
                rep = pointwise_check(patch, dist, bad)
                if not v.satisfied or not rep.passed:
                    broken += 1
        assert broken >= 30


class TestBoundaryPair:
    def test_zero_residual(self, patch_population):
        for i, patch in enumerate(patch_population):
            cone = PatchCone(patch)
            for j in range(15):
                w, t = random_boundary_pair(patch, 500 * i + j)
                a = HomVec3.of_wrench(w)
                b = HomVec3.of_twist(t)
                assert in_primal(cone, a, 1e-9)
                assert in_dual(cone, b, 1e-9)
                scale = max(1.0, a.norm * b.norm)
                assert abs(float(a.tangential @ b.tangential) + a.normal * b.normal) <= 1e-9 * scale

    def test_apex_degenerations_occur(self, square):
        zero_w = zero_t = 0
        for seed in range(160):
            w, t = random_boundary_pair(square, seed)
            if w.f_N == 0.0:
                zero_w += 1
            if t.normal_part_norm == 0.0:
                zero_t += 1
        assert zero_w > 0 and zero_t > 0


class TestDenseSamples:
    def test_polygon_cloud(self, lshape):
        pts = dense_samples(lshape, 2000, seed=1)
        assert len(pts) >= 2000
        # cloud lives in the hull and includes every hull vertex
        for v in lshape.hull:
            assert any(np.allclose(v, p, atol=1e-12) for p in pts[-len(lshape.hull) :])
        assert contains_region_many(Polygon(lshape.hull), pts, 1e-9).all()

    def test_ellipse_cloud(self):
        e = Ellipse([0.0, 0.0], [2.0, 1.0], 0.2)
        pts = dense_samples(e, 500)
        assert len(pts) >= 500 + 1024
        assert contains_region_many(e, pts, 1e-9).all()

    def test_dual_minimum_matches_support(self, patch_population):
        # brute-force minimum of the affine field vs the closed form
        rng = np.random.default_rng(104)
        from planarcontact import perp, support

        for patch in patch_population[:6]:
            pts = dense_samples(patch, 4096, seed=2)
            for _ in range(10):
                t = Twist(omega_T=rng.normal(size=2), v_N=rng.normal())
                brute = dual_minimum(t, pts)
                exact = t.v_N - support(patch, perp(t.omega_T)).value
                assert abs(brute - exact) <= 1e-6 * max(1.0, abs(exact), diameter(patch))


class TestPropertySuite:
    def test_fixed_patch(self, square):
        report = run_property_suite(square, seed=11, count=25)
        assert report.all_passed
        names = [e.name for e in report.entries]
        assert len(names) == 5
        for e in report.entries:
            assert e.passed == 25 and e.failed == 0

    def test_random_patches(self):
        report = run_property_suite(None, seed=3, count=20)
        assert report.all_passed

    def test_count_validation(self, square):
        with pytest.raises(ValueError):
            run_property_suite(square, seed=0, count=0)


def test_synthesize_matches_constructed_atoms(square):
    # for a boundary pair the synthesized atoms support the same wrench
    w, t = random_boundary_pair(square, 9)
    dist = synthesize_distribution(square, w, t)
    rep = pointwise_check(square, dist, t)
    assert rep.passed
    for p in dist.points:
        assert contains(square, p, 1e-9)
