"""The four contact regimes on one patch, printed and rendered to SVG.

Writes demos/out/*.svg. Run with python3 demos/regime_gallery.py"""

from pathlib import Path

from planarcontact import Polygon, Twist, Wrench, check, render_svg

OUT = Path(__file__).resolve().parent / "out"


def describe(name, patch, w, t):
    v = check(patch, w, t)
    cop = "none" if v.cop is None else f"({v.cop[0]:+.2f}, {v.cop[1]:+.2f})"
    zl = "none"
    if v.zero_line is not None:
        zl = f"normal=({v.zero_line.normal[0]:+.2f}, {v.zero_line.normal[1]:+.2f}) offset={v.zero_line.offset:+.2f}"
    print(f"{name:11s} satisfied={v.satisfied} regime={v.regime.kind:10s} cop={cop:16s} zero line: {zl}")
    OUT.mkdir(exist_ok=True)
    (OUT / f"{name}.svg").write_text(render_svg(patch, w, t, name), encoding="utf-8")


def main():
    square = Polygon([[-1, -1], [1, -1], [1, 1], [-1, 1]])

    # resting: force through the interior, nothing moves normally
    describe("resting", square, Wrench(f_N=1.0), Twist())

    # separating: no force, patch lifting away
    describe("separating", square, Wrench(), Twist(omega_T=[1.0, 0.0], v_N=2.0))

    # tipping: rotation about the bottom edge, force concentrated there
    describe("tipping", square, Wrench(m_T=[-2.0, 0.0], f_N=2.0), Twist(omega_T=[1.0, 0.0], v_N=1.0))

    # inactive: no force, no normal motion
    describe("inactive", square, Wrench(), Twist())

    # sliding is orthogonal to the normal law: same regime, motion flagged
    v = check(square, Wrench(f_N=1.0), Twist(v_T=[0.5, 0.0]))
    print(f"sliding     satisfied={v.satisfied} regime={v.regime.kind:10s} tangential_motion={v.regime.tangential_motion}")

    print(f"figures in {OUT}")


if __name__ == "__main__":
    main()
