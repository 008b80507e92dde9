"""The set-valued center of pressure as the limit of vanishing contact force.

A tipping wrench family f_N -> 0 keeps its CoP pinned on the edge the patch
tips about; at exactly zero force the classical CoP is undefined but the
extended CoP returns that whole edge. Run with
python3 demos/extended_cop_limit.py"""

import numpy as np

from planarcontact import Polygon, Twist, Wrench, center_of_pressure, extended_cop, perp


def main():
    square = Polygon([[-1, -1], [1, -1], [1, 1], [-1, 1]])
    # tipping about the bottom edge, CoP converging to (0.3, -1)
    tip = Twist(omega_T=[1.0, 0.0], v_N=1.0)
    target = np.array([0.3, -1.0])

    print(" f_N        cop                 |cop - limit|")
    for k in range(0, 9, 2):
        f = 10.0 ** (-k)
        w = Wrench(m_T=f * perp(target), f_N=f)
        cop = center_of_pressure(w)
        err = np.linalg.norm(cop - target)
        print(f" 1e-{k:02d}    ({cop[0]:+.6f}, {cop[1]:+.6f})   {err:.2e}")

    # below the tolerance the classical CoP is treated as undefined
    w0 = Wrench()
    print(f"\n f_N = 1e-12  cop = {center_of_pressure(Wrench(f_N=1e-12))}")
    print(f" f_N = 0      cop = {center_of_pressure(w0)}")
    s = extended_cop(square, w0, tip)
    pts = ", ".join(f"({p[0]:+.1f}, {p[1]:+.1f})" for p in s.points)
    print(f" extended cop: {s.kind} [{pts}]  (the tipping edge)")

    # with no angular velocity either, any hull point balances
    s2 = extended_cop(square, w0, Twist())
    print(f" no twist at all: {s2.kind} (every hull point is admissible)")


if __name__ == "__main__":
    main()
