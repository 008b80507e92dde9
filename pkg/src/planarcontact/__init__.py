"""Conic feasibility, regimes, and force synthesis for planar contact patches.

A frictionless patch contact admits a wrench exactly when its normal part
[m_T, f_N] lies in the cone spanned by the rotated patch hull, and a relative
twist is nonpenetrating exactly when [omega_T, v_N] lies in the dual cone;
contact solutions are the orthogonal pairs. This package provides the
geometry (hulls, support functions), the cone tests, regime classification,
the set-valued center of pressure, constructive distribution synthesis, a
brute-force pointwise oracle, and a CLI for scenario files and SVG figures.
"""

from .geometry import (
    DEFAULT_TOL,
    FULL_HULL,
    SEGMENT,
    VERTEX,
    Ellipse,
    InvalidPatch,
    Patch,
    Polygon,
    SupportResult,
    SupportSet,
    bounding_box,
    boundary_points,
    contains,
    contains_many,
    contains_region,
    contains_region_many,
    convex_hull,
    diameter,
    distance_to_hull_boundary,
    perp,
    point_segment_distance,
    support,
)
from .fields import (
    ForceDistribution,
    Twist,
    Wrench,
    center_of_pressure,
    integrate_wrench,
    normal_velocity,
    normal_velocity_many,
    tangential_velocity,
    varignon_shift,
    zmp,
)
from .cones import (
    HomVec3,
    PatchCone,
    complementarity_residual,
    in_dual,
    in_primal,
    sample_primal,
)
from .signorini import (
    INACTIVE,
    RESTING,
    SEPARATING,
    TIPPING,
    NotComplementary,
    Regime,
    SynthesisFailure,
    Verdict,
    ZeroLine,
    check,
    classify,
    extended_cop,
    synthesize_distribution,
    zero_line,
)
from .oracle import (
    PointwiseReport,
    RejectionBudgetExceeded,
    SamplePlan,
    SuiteEntry,
    SuiteReport,
    dense_samples,
    dual_minimum,
    plan_points,
    pointwise_check,
    random_boundary_pair,
    random_complementary_instance,
    random_convex_polygon,
    random_dual_element,
    random_ellipse,
    random_points_in_patch,
    random_repulsive_instance,
    run_property_suite,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "FULL_HULL",
    "SEGMENT",
    "VERTEX",
    "INACTIVE",
    "RESTING",
    "SEPARATING",
    "TIPPING",
    "Ellipse",
    "ForceDistribution",
    "HomVec3",
    "InvalidPatch",
    "NotComplementary",
    "Patch",
    "PatchCone",
    "PointwiseReport",
    "Polygon",
    "Regime",
    "RejectionBudgetExceeded",
    "SamplePlan",
    "SuiteEntry",
    "SuiteReport",
    "SupportResult",
    "SupportSet",
    "SynthesisFailure",
    "Twist",
    "Verdict",
    "Wrench",
    "ZeroLine",
    "bounding_box",
    "boundary_points",
    "center_of_pressure",
    "check",
    "classify",
    "complementarity_residual",
    "contains",
    "contains_many",
    "contains_region",
    "contains_region_many",
    "convex_hull",
    "dense_samples",
    "diameter",
    "distance_to_hull_boundary",
    "dual_minimum",
    "extended_cop",
    "in_dual",
    "in_primal",
    "integrate_wrench",
    "normal_velocity",
    "normal_velocity_many",
    "perp",
    "plan_points",
    "point_segment_distance",
    "pointwise_check",
    "random_boundary_pair",
    "random_complementary_instance",
    "random_convex_polygon",
    "random_dual_element",
    "random_ellipse",
    "random_points_in_patch",
    "random_repulsive_instance",
    "render_svg",
    "run_property_suite",
    "sample_primal",
    "support",
    "synthesize_distribution",
    "tangential_velocity",
    "varignon_shift",
    "zero_line",
    "zmp",
]
