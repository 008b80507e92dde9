"""Realizing a wrench with explicit atoms, including the nonconvex catch.

On an L-shaped patch the center of pressure can fall in the notch: inside
the hull, outside the material. No single atom works there, but two atoms
on the boundary do. Run with python3 demos/synthesis_notch.py"""

import numpy as np

from planarcontact import (
    Polygon,
    Twist,
    Wrench,
    contains,
    contains_region,
    integrate_wrench,
    perp,
    pointwise_check,
    synthesize_distribution,
)


def show(label, patch, w, t):
    dist = synthesize_distribution(patch, w, t)
    back = integrate_wrench(dist)
    err = np.linalg.norm(back.m_T - w.m_T) + abs(back.f_N - w.f_N)
    atoms = "  ".join(
        f"({p[0]:+.3f}, {p[1]:+.3f})*{q:.3f}" for p, q in zip(dist.points, dist.normal_weights)
    )
    ok = pointwise_check(patch, dist, t).passed
    print(f"{label}: {len(dist)} atom(s)  {atoms}")
    print(f"    reintegration error {err:.2e}, pointwise law {'holds' if ok else 'VIOLATED'}")


def main():
    lshape = Polygon([[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]])
    cp = np.array([1.4, 1.4])
    print(
        f"target cop ({cp[0]:.1f}, {cp[1]:.1f}): in hull = {contains(lshape, cp)}, "
        f"in material = {contains_region(lshape, cp)}"
    )

    w = Wrench(m_T=2.0 * perp(cp), f_N=2.0)
    show("notch, resting", lshape, w, Twist())

    # tipping about the hypotenuse: the zero line forces the atom chord
    u = np.array([1.0, 1.0]) / np.sqrt(2.0)
    t = Twist(omega_T=-0.8 * perp(u), v_N=0.8 * 3.0 / np.sqrt(2.0))
    w2 = Wrench(m_T=2.0 * perp([1.5, 1.5]), f_N=2.0)
    show("notch, tipping", lshape, w2, t)

    # interior cop needs just one atom
    square = Polygon([[-1, -1], [1, -1], [1, 1], [-1, 1]])
    show("square, resting", square, Wrench(m_T=[0.4, -0.6], f_N=2.0), Twist())

    # zero force needs none
    dist = synthesize_distribution(square, Wrench(), Twist(v_N=1.0))
    print(f"separating: {len(dist)} atoms (empty distribution)")


if __name__ == "__main__":
    main()
