"""Moment and support valuation operators on convex polytopes."""

from .geometry import (
    Body,
    Hyperplane,
    LinearMap,
    Simplex,
    clip,
    convex_body_from_points,
    dilate,
    embed,
    hausdorff_lower_bound,
    hull_with_origin,
    load_body,
    minkowski_sum,
    offset_segment,
    probability_simplex,
    random_unimodular,
    reference_body,
    reflect,
    save_body,
    shear_pair,
    standard_simplex,
    transform,
    translate,
    unit_box,
    unit_segment,
    upper_right_triangle,
)
from .lab import (
    BlackBoxValuation,
    CheckReport,
    FitResult,
    builtin_valuation,
    check_functional_equation,
    check_gl_scaling,
    check_homogeneity,
    check_inclusion_exclusion,
    check_sl_covariance,
    check_span_projection,
    check_valuation_split,
    combination_valuation,
    discontinuity_witness,
    fit_coefficients,
    run_suite,
)
from .moments import (
    McEstimate,
    body_positive_moment,
    divided_difference_power,
    monte_carlo_positive_moment,
    pochhammer_reciprocal,
    simplex_positive_moment,
)
from .operators import OperatorKind, PHomFunction, evaluate, lp_combine, valuation_function

__all__ = [
    "Body",
    "Hyperplane",
    "LinearMap",
    "Simplex",
    "BlackBoxValuation",
    "CheckReport",
    "FitResult",
    "McEstimate",
    "OperatorKind",
    "PHomFunction",
    "body_positive_moment",
    "builtin_valuation",
    "check_functional_equation",
    "check_gl_scaling",
    "check_homogeneity",
    "check_inclusion_exclusion",
    "check_sl_covariance",
    "check_span_projection",
    "check_valuation_split",
    "clip",
    "combination_valuation",
    "convex_body_from_points",
    "dilate",
    "discontinuity_witness",
    "divided_difference_power",
    "embed",
    "evaluate",
    "fit_coefficients",
    "hausdorff_lower_bound",
    "hull_with_origin",
    "load_body",
    "lp_combine",
    "minkowski_sum",
    "monte_carlo_positive_moment",
    "offset_segment",
    "pochhammer_reciprocal",
    "probability_simplex",
    "random_unimodular",
    "reference_body",
    "reflect",
    "run_suite",
    "save_body",
    "shear_pair",
    "simplex_positive_moment",
    "standard_simplex",
    "transform",
    "translate",
    "unit_box",
    "unit_segment",
    "upper_right_triangle",
]
