"""Ducci dynamics on Z_m^n.

Cycle structure of the adjacent-sum map D(x_1,...,x_n) = (x_1+x_2, ...,
x_n+x_1) mod m, the coefficient algebra of its powers, rotation-closure
classification with an exhaustive oracle, transition-graph components with
DOT export, and a CLI with a resumable results cache.
"""

__version__ = "0.1.0"

from ducci.core import (CycleInfo, RingParams, TupleZ, abs_ducci_step, add,
                        apply_power, basic_info, basic_tuple,
                        basis_decompose, cycle_info, ducci_step,
                        format_tuple, iterate, make_tuple, parse_tuple,
                        scale, shift, zero_tuple)
from ducci.coeffs import (CoeffRow, CoeffTriple, binom_vanishing_check,
                          lemma_sum_check, mod6_pattern_check,
                          product_split_check, row_binomial_exact,
                          row_iterative, row_polypow, triple_exact,
                          triple_fast)
from ducci.closure import (H_CLOSED, H_CLOSED_TRIVIAL, NOT_WEAKLY_H_CLOSED,
                           WEAKLY_H_CLOSED, HClosureReport, OracleReport,
                           canonical_beta, classify_fast, classify_oracle,
                           rotation_matches, scan_conjectures,
                           verify_even_prime_rotation, verify_mixed_rotation,
                           verify_pow2_rotation, verify_prime_rotation,
                           verify_relation)
from ducci.graph import ComponentGraph, component, component_equal, preimages, to_dot
from ducci.errors import ResourceLimitError

__all__ = [
    "__version__",
    "RingParams", "TupleZ", "CycleInfo",
    "ducci_step", "shift", "add", "scale", "iterate", "apply_power",
    "cycle_info", "basic_info", "basis_decompose", "abs_ducci_step",
    "make_tuple", "zero_tuple", "basic_tuple", "parse_tuple", "format_tuple",
    "CoeffRow", "CoeffTriple", "row_iterative", "row_binomial_exact",
    "row_polypow", "triple_fast", "triple_exact", "lemma_sum_check",
    "product_split_check", "mod6_pattern_check", "binom_vanishing_check",
    "H_CLOSED", "H_CLOSED_TRIVIAL", "WEAKLY_H_CLOSED", "NOT_WEAKLY_H_CLOSED",
    "HClosureReport", "OracleReport", "classify_fast", "classify_oracle",
    "rotation_matches", "canonical_beta", "verify_relation",
    "verify_pow2_rotation", "verify_prime_rotation", "verify_mixed_rotation",
    "verify_even_prime_rotation", "scan_conjectures",
    "ComponentGraph", "preimages", "component", "component_equal", "to_dot",
    "ResourceLimitError",
]
