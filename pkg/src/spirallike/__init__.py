"""Strongly lambda-spirallike domains of order alpha.

Spiral coordinates, radius-function characterizations, the quasiconformal
reflection in the boundary, the standard domains ``U`` and ``V`` and the
explicit conformal map onto ``U``.
"""

from .charac import (
    CheckReport,
    check_all,
    check_derivative,
    check_dual_inclusion,
    check_inclusion_boundary,
    check_inclusion_interior,
    check_lipschitz,
    minimal_order,
)
from .conformal import (
    boundary_trace,
    g_map,
    integral_identity,
    log_k_at_one,
    map_g,
    map_k,
    q_function,
    radius_defect,
    spirallike_order_sample,
    tip_prevertex,
)
from .domain import (
    ConstantRadius,
    DomainConstants,
    RadiusFunction,
    SampledRadius,
    SpiralParams,
    StandardU,
    StandardV,
    boundary_polyline,
    constants,
    contains,
    dual,
    scale_domain,
    standard_boundary,
    standard_radius,
    tip,
)
from .errors import (
    ConstraintError,
    DegenerateMapError,
    OriginError,
    QuadratureError,
    RidgeError,
    SingularityError,
    SpirallikeError,
    UnboundedOrderError,
)
from .reflection import INF, AnalyticMap, BeltramiReport, beltrami_analytic, beltrami_fd, dilatation_sup, extend, reflect
from .spiral import decompose, lambda_arg, spiral_point, spiral_segment, to_log

__version__ = "0.1.0"

__all__ = [
    "AnalyticMap",
    "BeltramiReport",
    "CheckReport",
    "ConstantRadius",
    "ConstraintError",
    "DegenerateMapError",
    "DomainConstants",
    "INF",
    "OriginError",
    "QuadratureError",
    "RadiusFunction",
    "RidgeError",
    "SampledRadius",
    "SingularityError",
    "SpiralParams",
    "SpirallikeError",
    "StandardU",
    "StandardV",
    "UnboundedOrderError",
    "beltrami_analytic",
    "beltrami_fd",
    "boundary_polyline",
    "boundary_trace",
    "check_all",
    "check_derivative",
    "check_dual_inclusion",
    "check_inclusion_boundary",
    "check_inclusion_interior",
    "check_lipschitz",
    "constants",
    "contains",
    "decompose",
    "dilatation_sup",
    "dual",
    "extend",
    "g_map",
    "integral_identity",
    "lambda_arg",
    "log_k_at_one",
    "map_g",
    "map_k",
    "minimal_order",
    "q_function",
    "radius_defect",
    "reflect",
    "scale_domain",
    "spiral_point",
    "spiral_segment",
    "spirallike_order_sample",
    "standard_boundary",
    "standard_radius",
    "tip",
    "tip_prevertex",
    "to_log",
]
