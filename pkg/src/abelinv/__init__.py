"""Differential invariants of the first-kind Abel equation in exact jet arithmetic."""

from .canonical import (
    CanonicalData,
    ModuliMap,
    NonPolynomialShift,
    canonical_related,
    canonicalize,
    compose_moduli,
    dJ_dX,
    find_moduli,
    moduli_apply,
)
from .cartan import (
    PointXYU,
    coframe,
    dual_frame,
    invariant_I,
    partials,
    s3_remark_check,
    structure_residuals,
)
from .equation import (
    AbelEquation,
    ChartedEquation,
    PseudoGroupMap,
    compose_maps,
    reduce_second_kind,
    rhs,
    scaling_map,
    series_solve,
    transform,
)
from .invariants import (
    MonomialGrade,
    connection,
    covariant_derivative,
    degree_of,
    nabla_raise,
    s3,
    s_hierarchy,
    weight_of,
)
from .kernels import BACKEND
from .series import Jet

__version__ = "0.1.0"

__all__ = [
    "AbelEquation",
    "BACKEND",
    "canonical_related",
    "CanonicalData",
    "canonicalize",
    "ChartedEquation",
    "coframe",
    "compose_maps",
    "compose_moduli",
    "connection",
    "covariant_derivative",
    "degree_of",
    "dJ_dX",
    "dual_frame",
    "find_moduli",
    "invariant_I",
    "Jet",
    "moduli_apply",
    "ModuliMap",
    "MonomialGrade",
    "nabla_raise",
    "NonPolynomialShift",
    "partials",
    "PointXYU",
    "PseudoGroupMap",
    "reduce_second_kind",
    "rhs",
    "s3",
    "s3_remark_check",
    "s_hierarchy",
    "scaling_map",
    "series_solve",
    "structure_residuals",
    "transform",
    "weight_of",
]
