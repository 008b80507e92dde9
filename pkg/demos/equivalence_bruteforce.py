"""Closed-form dual membership vs brute-force field minimization.

The dual test is one support-function evaluation; the brute force floors
the normal velocity field over tens of thousands of patch samples. They
must agree. Run with python3 demos/equivalence_bruteforce.py"""

import time

import numpy as np

from planarcontact import (
    HomVec3,
    PatchCone,
    Twist,
    dense_samples,
    diameter,
    dual_minimum,
    in_dual,
    random_convex_polygon,
)


def main():
    patch = random_convex_polygon(2024)
    print(f"random polygon with {len(patch.vertices)} vertices, diameter {diameter(patch):.3f}")

    cone = PatchCone(patch)
    cloud = dense_samples(patch, 20_000, seed=1)
    print(f"sample cloud: {len(cloud)} points")

    rng = np.random.default_rng(5)
    n = 2000
    agree = 0
    inside = 0
    t0 = time.perf_counter()
    for _ in range(n):
        omega = -2.0 + 4.0 * rng.random(2)
        v_N = (-3.0 + 6.0 * rng.random()) * max(1.0, diameter(patch))
        fast = in_dual(cone, HomVec3(omega, v_N))
        slow = dual_minimum(Twist(omega_T=omega, v_N=v_N), cloud) >= -1e-9
        agree += fast == slow
        inside += fast
    dt = time.perf_counter() - t0

    print(f"{n} random twists: {agree} agreements, {inside} feasible, {dt:.2f}s")
    if agree == n:
        print("closed form and brute force never disagreed")
    else:
        print(f"DISAGREEMENTS: {n - agree}")


if __name__ == "__main__":
    main()
