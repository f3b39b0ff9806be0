"""Rarefied sums of b-multiplicative sequences, their fractal profiles, and the
exact cyclotomic-ring quantities (norms, coset products, traces) behind them."""

from .combinatorics import (
    AlternatingSumIdentity,
    LinearForm,
    Partition,
    binomial_alternating_sum,
    brute_linear_form_counts,
    brute_linear_form_difference,
    enumerate_partitions,
    linear_form_difference,
    mobius,
    mobius_inversion_difference,
    mobius_product_formula,
    sequence_count_closed_form,
    subset_count,
)
from .cyclotomic import (
    ONE_MINUS_T,
    ONE_PLUS_T_MINUS_T2,
    CosetSystem,
    GaloisSymmetryError,
    RingElement,
    coset_products,
    evaluate_numeric,
    mul_mod,
    norm_from_expansion,
    product_over_set,
    support_from_coefficients,
    trace_of_coset_products,
)
from .fractal import FractalProfile, expansion, parse_digit_string
from .lucas import (
    CongruenceReport,
    LucasPair,
    Verdict,
    binomials_formula,
    domino_circle,
    domino_interval,
    factor_congruence_check,
    factorize,
    fibonacci,
    lucas,
    lucas_identity_check,
    lucas_pair,
)
from .sequences import (
    PLUS_PLUS_MINUS,
    THUE_MORSE,
    Classification,
    DigitSums,
    Growth,
    MultiplicativeSequence,
    OracleBoundError,
    build_twist,
    classify,
    closed_form_partial_sum,
    from_json_weights,
    from_signs,
    naive_partial_sum,
    parse_sequence_literal,
    rarefied_sum,
    rarefied_sum_via_twists,
    thue_morse_fast,
)
from .spectral import SpectralReport, eigenvalues_of_m, spectral_report

__version__ = "0.1.0"
