"""Membership spot checks: which wrenches a patch can exert, which twists
it tolerates. Run with python3 demos/cone_membership.py"""

import numpy as np

from planarcontact import (
    Ellipse,
    HomVec3,
    PatchCone,
    Polygon,
    in_dual,
    in_primal,
    sample_primal,
)


def main():
    square = Polygon([[-1, -1], [1, -1], [1, 1], [-1, 1]])
    cone = PatchCone(square)

    print("unit square, primal side [m_T, f_N]:")
    candidates = [
        ([0.0, 0.0], 2.0, "pure push through the center"),
        ([-2.0, 0.0], 2.0, "push through the bottom edge midpoint"),
        ([-3.0, 0.0], 2.0, "lever arm outside the patch"),
        ([0.0, 0.0], -1.0, "adhesion (pulling)"),
        ([0.0, 0.0], 0.0, "no contact force at all"),
    ]
    for m_T, f_N, label in candidates:
        ok = in_primal(cone, HomVec3(m_T, f_N))
        print(f"  m_T={m_T} f_N={f_N:+.1f}  {'in' if ok else 'OUT'}   ({label})")

    print("dual side [omega_T, v_N]:")
    twists = [
        ([0.0, 0.0], 1.0, "pure lift"),
        ([1.0, 0.0], 1.0, "tips about the bottom edge"),
        ([1.0, 0.0], 0.5, "same axis, not enough lift"),
        ([0.0, 0.0], -0.5, "uniform penetration"),
    ]
    for omega, v_N, label in twists:
        ok = in_dual(cone, HomVec3(omega, v_N))
        print(f"  omega={omega} v_N={v_N:+.1f}  {'in' if ok else 'OUT'}   ({label})")

    # cones are scale invariant: magnitude never changes the answer
    h = HomVec3([-2.0, 0.0], 2.0)
    scaled = [in_primal(cone, h.scaled(s)) for s in (1e-6, 1.0, 1e6)]
    print(f"scaling a member by 1e-6 / 1 / 1e6: {scaled}")

    # sampled members of an elliptical patch cone, paired against a lift
    egg = Ellipse([0.0, 0.0], [2.0, 1.0], 0.3)
    egg_cone = PatchCone(egg)
    lift = HomVec3([0.0, 0.0], 1.0)
    products = []
    for h in sample_primal(egg_cone, 7, 200):
        products.append(h.tangential @ lift.tangential + h.normal * lift.normal)
    print(
        f"ellipse cone x pure lift, 200 samples: min product {min(products):.3e} (never negative)"
    )


if __name__ == "__main__":
    main()
