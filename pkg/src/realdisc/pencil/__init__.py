"""Plane-cubic testbed: signed counts of real rational cubics through real configurations."""
from .config import (
    GenericityExhausted,
    NonGenericError,
    Pencil,
    RealPointConfig,
    Tolerances,
    curve_through,
    interpolation_matrix,
    mobius,
    pencil_through,
    sample_config,
    scale_config,
)
from .count import (
    ExperimentReport,
    ExperimentSummary,
    NodalMember,
    NodeType,
    classify_member,
    count_pencil,
    invariance_experiment,
    refine_node,
    run_trial,
    signed_count,
)
from .polys import HomogeneousPoly, monomials
from .resultant import discriminant_poly, macaulay_det, resultant
from .roots import poly_roots

__all__ = [
    "ExperimentReport", "ExperimentSummary", "GenericityExhausted", "HomogeneousPoly",
    "NodalMember", "NodeType", "NonGenericError", "Pencil", "RealPointConfig", "Tolerances",
    "classify_member", "count_pencil", "curve_through", "discriminant_poly", "interpolation_matrix",
    "invariance_experiment", "macaulay_det", "mobius", "monomials", "pencil_through", "poly_roots",
    "refine_node", "resultant", "run_trial", "sample_config", "scale_config", "signed_count",
]
