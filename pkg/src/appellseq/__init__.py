"""Exact arithmetic for the related numbers and Appell polynomials of
higher-order Appell sequences.

Given f(t) = sum_n d_n t^n / n! with d_0 = 1, the related numbers of
order r are defined by 1 / f(t)^r = sum_n a_n^(r) t^n / n!, and the
attached polynomials are A_n^(r)(z) = sum_m binom(n, m) a_m^(r) z^(n-m).
Three independent algorithms (a triangular recurrence, an alternating
sum over compositions, and a lower-Hessenberg determinant with two
kernels) compute the same numbers and can be cross-checked.
"""

from .arith import (
    DEFAULT_COMPOSITION_CAP,
    CombinatorialBlowupError,
    binomial,
    compositions,
    format_rational,
    parse_rational,
    rising_factorial,
)
from .determinants import bareiss_det, hessenberg_leading_minors, related_matrix
from .engine import (
    AppellPolynomial,
    CoefficientSequence,
    NormalizationError,
    PowerCoefficientTable,
    RelatedNumberTable,
    VerificationReport,
    alt_power_sum_check,
    appell_polynomial,
    compute_D,
    cross_verify,
    polynomial_derivative,
    polynomial_eval,
    power_sum_check,
    related_numbers_composition,
    related_numbers_determinant,
    related_numbers_inversion,
    related_numbers_recurrence,
)
from .families import (
    FamilySpec,
    family_coefficients,
    family_identity_checks,
    load_custom_family,
)
from .series import (
    InsufficientPrecisionError,
    NotInvertibleError,
    TruncatedSeries,
)

__version__ = "0.1.0"

__all__ = [
    "AppellPolynomial",
    "CoefficientSequence",
    "CombinatorialBlowupError",
    "DEFAULT_COMPOSITION_CAP",
    "FamilySpec",
    "InsufficientPrecisionError",
    "NormalizationError",
    "NotInvertibleError",
    "PowerCoefficientTable",
    "RelatedNumberTable",
    "TruncatedSeries",
    "VerificationReport",
    "alt_power_sum_check",
    "appell_polynomial",
    "bareiss_det",
    "binomial",
    "compositions",
    "compute_D",
    "cross_verify",
    "family_coefficients",
    "family_identity_checks",
    "format_rational",
    "hessenberg_leading_minors",
    "load_custom_family",
    "parse_rational",
    "polynomial_derivative",
    "polynomial_eval",
    "power_sum_check",
    "related_matrix",
    "related_numbers_composition",
    "related_numbers_determinant",
    "related_numbers_inversion",
    "related_numbers_recurrence",
    "rising_factorial",
]
