"""Copartition counting functions: exact and mod-2 series, enumeration,
parity analysis, and density-table regeneration."""

__version__ = "0.1.0"

from .params import CpParams
from .series import (
    ExactSeries,
    FactorSpec,
    ParitySeries,
    copartition_factors,
    copartition_parity,
    copartition_series,
    expand_factors,
    expand_factors_mod2,
    mul,
    negated_pochhammer,
    pentagonal_support,
    pochhammer,
    reciprocal,
    reduce_mod2,
    self_conjugate_parity,
    self_conjugate_series,
    triple_product_theta,
)
from .enumeration import (
    Copartition,
    count_copartitions,
    crank_distribution,
    distinct_parts_to_hooks,
    enumerate_copartitions,
    hooks_to_distinct_parts,
)
from .parity import (
    DensityReport,
    Factorization,
    ProgressionCheck,
    ProgressionFamily,
    TWO_SQUARES,
    X2_PLUS_3Y2,
    andrews_mod5_check,
    both_parities_prefix_check,
    brute_force_representable,
    density_report,
    even_guarantee_314,
    even_guarantee_516,
    factorize,
    form_equivalence_check,
    format_proportion,
    is_prime,
    is_sum_of_two_squares,
    is_x2_plus_3y2,
    lacunary_odd_support_check,
    odd_term_count_check,
    progression_family,
    theta_product_identity_check,
    verify_even_progression,
)
from .cache import cached_copartition_parity, CACHE_DIR_ENV
from .tables import TableData, generate_table

__all__ = [
    "CpParams",
    "ExactSeries",
    "FactorSpec",
    "ParitySeries",
    "Copartition",
    "DensityReport",
    "Factorization",
    "ProgressionCheck",
    "ProgressionFamily",
    "TableData",
    "TWO_SQUARES",
    "X2_PLUS_3Y2",
    "CACHE_DIR_ENV",
    "andrews_mod5_check",
    "both_parities_prefix_check",
    "brute_force_representable",
    "cached_copartition_parity",
    "copartition_factors",
    "copartition_parity",
    "copartition_series",
    "count_copartitions",
    "crank_distribution",
    "density_report",
    "distinct_parts_to_hooks",
    "enumerate_copartitions",
    "even_guarantee_314",
    "even_guarantee_516",
    "expand_factors",
    "expand_factors_mod2",
    "factorize",
    "form_equivalence_check",
    "format_proportion",
    "generate_table",
    "hooks_to_distinct_parts",
    "is_prime",
    "is_sum_of_two_squares",
    "is_x2_plus_3y2",
    "lacunary_odd_support_check",
    "mul",
    "negated_pochhammer",
    "odd_term_count_check",
    "pentagonal_support",
    "pochhammer",
    "progression_family",
    "reciprocal",
    "reduce_mod2",
    "self_conjugate_parity",
    "self_conjugate_series",
    "theta_product_identity_check",
    "triple_product_theta",
    "verify_even_progression",
]
