"""Exact computation of decomposition factors of twisted D-modules on plane line arrangements."""

from .scalar import Scalar, parse_scalar
from .poly import LinearForm, Poly2, divides_linear, pairwise_independent
from .weyl import (
    AnnPair,
    WeylOp,
    build_annihilators,
    compare_monomials,
    in_N0_span,
    initial_term,
    normal_form,
    parse_op,
    weight_component,
    weyl_mul,
)
from .arrangement import (
    Arrangement,
    DuplicateLine,
    LengthMismatch,
    NormalizedArrangement,
    integer_count,
    load_arrangement,
    nbc_subsets,
    normalize_beta,
    normalize_coordinates,
    validate,
)
from .action import TwistedElement, apply_generator, apply_op, euler_reduction_a1, valuation, verify_annihilators
from .certs import lemma43_simplify, lemma44_reduce, lemma45_quotient_class
from .decomp import (
    DecompositionReport,
    FactorSupport,
    count_factors,
    external_product_count,
    factor_supports,
    image_basis_descriptor,
    multiplicity_bound,
    normal_crossings_count,
    restricted_exponent,
)

__version__ = "0.1.0"
