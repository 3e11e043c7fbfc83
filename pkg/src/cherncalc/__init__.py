"""Exact Chern-class calculus on split virtual bundles: truncated graded
polynomial arithmetic, partition/Littlewood-Richardson combinatorics,
lambda/gamma/Schur operations, Grassmannian presentations, and exact
verification of the factorial comparison between Chern classes and the
associated graded of the filtration."""

__version__ = "0.1.0"

from .bigpoly import (
    GradedPoly,
    PolyRing,
    TotalChern,
    Variable,
    elementary_symmetric_reduce,
    poly_mul,
    series_invert,
    tau_substitute,
)
from .chern_roots import (
    KClass,
    LineElement,
    character,
    chern_of_lambda,
    dual,
    lambda_k,
    schur_op,
    schur_skew_op,
    tensor,
    total_chern,
    u_ring,
    universal_tensor_poly,
)
from .errors import (
    CalculusError,
    ContextError,
    DegreeError,
    DomainError,
    SymmetryError,
)
from .gamma import (
    GammaGradedClass,
    augmentation_expand,
    filtration_degree,
    gamma_chern,
    gamma_op,
    gamma_series,
    v_ring,
)
from .grassmann import (
    BoxedSchurElement,
    boxed_rank,
    chern_relations,
    schur_multiply,
    verify_presentation,
)
from .grr import (
    VerificationReport,
    monomial_class,
    run_verification,
    verify_factor,
    verify_grr_composition,
    verify_vanishing,
)
from .partitions import (
    Partition,
    conjugate,
    lr_coefficient,
    parse_partition,
    partitions_in_box,
    schur_in_variables,
)

__all__ = [
    "BoxedSchurElement",
    "CalculusError",
    "ContextError",
    "DegreeError",
    "DomainError",
    "GammaGradedClass",
    "GradedPoly",
    "KClass",
    "LineElement",
    "Partition",
    "PolyRing",
    "SymmetryError",
    "TotalChern",
    "Variable",
    "VerificationReport",
    "augmentation_expand",
    "boxed_rank",
    "character",
    "chern_of_lambda",
    "chern_relations",
    "conjugate",
    "dual",
    "elementary_symmetric_reduce",
    "filtration_degree",
    "gamma_chern",
    "gamma_op",
    "gamma_series",
    "lambda_k",
    "lr_coefficient",
    "monomial_class",
    "parse_partition",
    "partitions_in_box",
    "poly_mul",
    "run_verification",
    "schur_in_variables",
    "schur_multiply",
    "schur_op",
    "schur_skew_op",
    "series_invert",
    "tau_substitute",
    "tensor",
    "total_chern",
    "u_ring",
    "universal_tensor_poly",
    "v_ring",
    "verify_factor",
    "verify_grr_composition",
    "verify_presentation",
    "verify_vanishing",
]
