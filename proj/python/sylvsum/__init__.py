"""Exact Sylvester double sums, subresultants and cofactor polynomials.

Polynomials are ascending lists of rational strings, e.g. ["2", "-3", "1"]
for x^2 - 3x + 2. Inputs may be ints, strings or fractions.Fraction.
"""

from fractions import Fraction

from ._core import (
    MathError,
    ParseError,
    binomial,
    classify_case,
    cofactors,
    expected_sylv,
    poly_eval,
    poly_from_roots,
    principal_coeff,
    r_product,
    resultant,
    subresultant,
    sylvester_double_sum,
    verify_suite,
    verify_theorem_sweep,
)

__all__ = [
    "MathError",
    "ParseError",
    "as_fractions",
    "binomial",
    "classify_case",
    "cofactors",
    "expected_sylv",
    "poly_eval",
    "poly_from_roots",
    "principal_coeff",
    "r_product",
    "resultant",
    "subresultant",
    "sylvester_double_sum",
    "verify_suite",
    "verify_theorem_sweep",
]


def as_fractions(coeffs):
    return [Fraction(c) for c in coeffs]
