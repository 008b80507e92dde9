"""Command-line front end: scenario checking, classification, synthesis,
rendering, and the randomized property suites.

Scenario files are JSON: a patch descriptor plus named cases, each carrying
a 6-component wrench [m_T, m_N, f_T, f_N] and twist [omega_T, omega_N, v_T,
v_N]. Output records are JSON lines with a fixed field set and 17
significant digit numbers, so byte-identical reruns double as regression
fixtures. Exit status: 0 all cases satisfied (or all suites passed), 1
otherwise, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .geometry import DEFAULT_TOL, Ellipse, InvalidPatch, Patch, Polygon
from .fields import Twist, Wrench, integrate_wrench
from .signorini import Verdict, check, synthesize_distribution, NotComplementary
from .oracle import run_property_suite
from .render import render_svg


class ScenarioError(ValueError):
    """Scenario or patch file violates the schema; message names the field."""


@dataclass(frozen=True)
class Case:
    name: str
    wrench: Wrench
    twist: Twist


@dataclass(frozen=True)
class Scenario:
    patch: Patch
    cases: tuple
    tol: Optional[float]


def _fail(path: str, msg: str):
    raise ScenarioError(f"{path}: {msg}")


def _reals(obj, path: str, n: int) -> list[float]:
    if not isinstance(obj, (list, tuple)) or len(obj) != n:
        _fail(path, f"expected a list of {n} numbers")
    out = []
    for i, v in enumerate(obj):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            _fail(f"{path}[{i}]", "expected a number")
        out.append(float(v))
    return out


def parse_patch(obj, path: str = "patch") -> Patch:
    if not isinstance(obj, dict):
        _fail(path, "expected an object")
    kind = obj.get("type")
    try:
        if kind == "polygon":
            verts = obj.get("vertices")
            if not isinstance(verts, list) or len(verts) < 1:
                _fail(f"{path}.vertices", "expected a nonempty list of [x, y] pairs")
            rows = [_reals(v, f"{path}.vertices[{i}]", 2) for i, v in enumerate(verts)]
            return Polygon(np.array(rows))
        if kind == "ellipse":
            center = _reals(obj.get("center"), f"{path}.center", 2)
            axes = _reals(obj.get("semi_axes"), f"{path}.semi_axes", 2)
            rotation = obj.get("rotation", 0.0)
            if isinstance(rotation, bool) or not isinstance(rotation, (int, float)):
                _fail(f"{path}.rotation", "expected a number")
            return Ellipse(center, axes, float(rotation))
    except InvalidPatch as exc:
        _fail(path, str(exc))
    _fail(f"{path}.type", "expected 'polygon' or 'ellipse'")


def parse_scenario(text: str, source: str = "scenario") -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        _fail(source, "expected a top-level object")
    patch = parse_patch(doc.get("patch"), "patch")
    raw_cases = doc.get("cases")
    if not isinstance(raw_cases, list) or len(raw_cases) < 1:
        _fail("cases", "expected a nonempty list")
    cases = []
    names = set()
    for i, rc in enumerate(raw_cases):
        path = f"cases[{i}]"
        if not isinstance(rc, dict):
            _fail(path, "expected an object")
        name = rc.get("name")
        if not isinstance(name, str) or not name:
            _fail(f"{path}.name", "expected a nonempty string")
        if name in names:
            _fail(f"{path}.name", f"duplicate case name {name!r}")
        names.add(name)
        wr = _reals(rc.get("wrench"), f"{path}.wrench", 6)
        tw = _reals(rc.get("twist"), f"{path}.twist", 6)
        w = Wrench(m_T=wr[0:2], m_N=wr[2], f_T=wr[3:5], f_N=wr[5])
        t = Twist(omega_T=tw[0:2], omega_N=tw[2], v_T=tw[3:5], v_N=tw[5])
        cases.append(Case(name, w, t))
    tol = doc.get("tol")
    if tol is not None and (isinstance(tol, bool) or not isinstance(tol, (int, float))):
        _fail("tol", "expected a number")
    return Scenario(patch, tuple(cases), None if tol is None else float(tol))


def _emit(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format(float(obj), ".17g"))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def record_line(obj: dict) -> str:
    """One JSON record with fixed 17-significant-digit number formatting."""
    out: list = []
    _emit(obj, out)
    return "".join(out)


def _vec(v) -> Optional[list]:
    return None if v is None else [float(v[0]), float(v[1])]


def verdict_record(name: str, verdict: Verdict) -> dict:
    regime = verdict.regime
    zl = verdict.zero_line
    return {
        "name": name,
        "satisfied": verdict.satisfied,
        "primal_ok": verdict.primal_ok,
        "dual_ok": verdict.dual_ok,
        "residual": verdict.residual,
        "regime": None if regime is None else regime.kind,
        "tangential_motion": None if regime is None else regime.tangential_motion,
        "cop": _vec(verdict.cop),
        "zero_line": None if zl is None else {"normal": _vec(zl.normal), "offset": zl.offset},
        "extended_cop": {
            "kind": verdict.extended_cop.kind,
            "points": [list(map(float, p)) for p in verdict.extended_cop.points],
        },
    }


def _pretty_vec(v) -> str:
    return "none" if v is None else f"({v[0]:.6g}, {v[1]:.6g})"


def verdict_pretty(name: str, verdict: Verdict) -> str:
    regime = verdict.regime
    zl = verdict.zero_line
    lines = [
        f"case {name}",
        f"  satisfied: {'yes' if verdict.satisfied else 'no'}"
        f"  (primal {'ok' if verdict.primal_ok else 'FAIL'},"
        f" dual {'ok' if verdict.dual_ok else 'FAIL'},"
        f" residual {verdict.residual:.6g})",
        "  regime: "
        + ("n/a" if regime is None else regime.kind)
        + ("" if regime is None else f" (tangential motion: {'yes' if regime.tangential_motion else 'no'})"),
        f"  cop: {_pretty_vec(verdict.cop)}",
        "  zero line: "
        + ("none" if zl is None else f"normal={_pretty_vec(zl.normal)} offset={zl.offset:.6g}"),
        f"  extended cop: {verdict.extended_cop.kind}"
        + "".join(f" {_pretty_vec(p)}" for p in verdict.extended_cop.points),
    ]
    return "\n".join(lines)


def _effective_tol(args, scenario: Scenario) -> float:
    if args.tol is not None:
        return args.tol
    if scenario.tol is not None:
        return scenario.tol
    return DEFAULT_TOL


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_check(args) -> int:
    scenario = parse_scenario(_read(args.scenario), args.scenario)
    tol = _effective_tol(args, scenario)
    chunks = []
    all_ok = True
    for case in scenario.cases:
        verdict = check(scenario.patch, case.wrench, case.twist, tol)
        all_ok = all_ok and verdict.satisfied
        if args.format == "pretty":
            chunks.append(verdict_pretty(case.name, verdict))
        else:
            chunks.append(record_line(verdict_record(case.name, verdict)))
    sys.stdout.write("\n".join(chunks) + "\n")
    return 0 if all_ok else 1


def cmd_classify(args) -> int:
    scenario = parse_scenario(_read(args.scenario), args.scenario)
    tol = _effective_tol(args, scenario)
    chunks = []
    all_ok = True
    for case in scenario.cases:
        verdict = check(scenario.patch, case.wrench, case.twist, tol)
        all_ok = all_ok and verdict.satisfied
        regime = verdict.regime
        if args.format == "pretty":
            label = regime.kind if regime is not None else "not complementary"
            chunks.append(f"case {case.name}: {label}")
        else:
            chunks.append(
                record_line(
                    {
                        "name": case.name,
                        "satisfied": verdict.satisfied,
                        "regime": None if regime is None else regime.kind,
                        "tangential_motion": None if regime is None else regime.tangential_motion,
                    }
                )
            )
    sys.stdout.write("\n".join(chunks) + "\n")
    return 0 if all_ok else 1


def cmd_synthesize(args) -> int:
    scenario = parse_scenario(_read(args.scenario), args.scenario)
    tol = _effective_tol(args, scenario)
    chunks = []
    all_ok = True
    for case in scenario.cases:
        record: dict = {"name": case.name}
        try:
            dist = synthesize_distribution(scenario.patch, case.wrench, case.twist, tol)
        except NotComplementary:
            all_ok = False
            record.update({"satisfied": False, "atoms": None, "reintegration_error": None})
        else:
            back = integrate_wrench(dist)
            err = float(
                np.hypot(*(back.m_T - case.wrench.m_T)) + abs(back.f_N - case.wrench.f_N)
            )
            record.update(
                {
                    "satisfied": True,
                    "atoms": [
                        {"point": list(map(float, p)), "weight": float(wt)}
                        for p, wt in zip(dist.points, dist.normal_weights)
                    ],
                    "reintegration_error": err,
                }
            )
        if args.format == "pretty":
            if record["atoms"] is None:
                chunks.append(f"case {case.name}: not complementary, no distribution")
            else:
                atoms = " ".join(
                    f"({a['point'][0]:.6g}, {a['point'][1]:.6g})*{a['weight']:.6g}"
                    for a in record["atoms"]
                )
                chunks.append(f"case {case.name}: {len(record['atoms'])} atom(s) {atoms}")
        else:
            chunks.append(record_line(record))
    sys.stdout.write("\n".join(chunks) + "\n")
    return 0 if all_ok else 1


_SAFE_NAME = re.compile(r"[^A-Za-z0-9._-]+")


def cmd_render(args) -> int:
    scenario = parse_scenario(_read(args.scenario), args.scenario)
    tol = _effective_tol(args, scenario)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    chunks = []
    for case in scenario.cases:
        svg = render_svg(scenario.patch, case.wrench, case.twist, case.name, tol)
        fname = _SAFE_NAME.sub("_", case.name) + ".svg"
        target = out_dir / fname
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        chunks.append(record_line({"name": case.name, "file": str(target)}))
    sys.stdout.write("\n".join(chunks) + "\n")
    return 0


def cmd_oracle(args) -> int:
    patch = None
    if args.patch_file is not None:
        doc = json.loads(_read(args.patch_file))
        patch = parse_patch(doc if isinstance(doc, dict) else None, "patch")
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    report = run_property_suite(patch, args.seed, args.count, tol)
    chunks = []
    for entry in report.entries:
        if args.format == "pretty":
            chunks.append(
                f"{entry.name}: {entry.passed} passed, {entry.failed} failed,"
                f" worst {entry.worst:.3e}"
            )
        else:
            chunks.append(
                record_line(
                    {
                        "suite": entry.name,
                        "passed": entry.passed,
                        "failed": entry.failed,
                        "worst": entry.worst,
                    }
                )
            )
    sys.stdout.write("\n".join(chunks) + "\n")
    return 0 if report.all_passed else 1


def _positive_count(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("count must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarcontact",
        description="Planar contact-patch feasibility, regimes, and synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scenario=True):
        if scenario:
            p.add_argument("scenario", help="scenario JSON file")
        p.add_argument("--tol", type=float, default=None, help="relative tolerance (default 1e-9)")
        p.add_argument(
            "--format", choices=("records", "pretty"), default="records", help="output style"
        )

    p_check = sub.add_parser("check", help="verdict per case")
    common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="regime per case")
    common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_synth = sub.add_parser("synthesize", help="realizing atom distribution per case")
    common(p_synth)
    p_synth.set_defaults(func=cmd_synthesize)

    p_render = sub.add_parser("render", help="SVG picture per case")
    p_render.add_argument("scenario", help="scenario JSON file")
    p_render.add_argument("--tol", type=float, default=None, help="relative tolerance (default 1e-9)")
    p_render.add_argument("--out", required=True, help="output directory for SVG files")
    p_render.set_defaults(func=cmd_render)

    p_oracle = sub.add_parser("oracle", help="randomized property suites")
    p_oracle.add_argument(
        "patch_file", nargs="?", default=None, help="patch JSON file (random patches if omitted)"
    )
    p_oracle.add_argument("--tol", type=float, default=None, help="relative tolerance (default 1e-9)")
    p_oracle.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p_oracle.add_argument("--count", type=_positive_count, default=200, help="instances per suite")
    p_oracle.add_argument(
        "--format", choices=("records", "pretty"), default="records", help="output style"
    )
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
