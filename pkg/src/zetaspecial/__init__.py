"""Exact and numeric special values of zeta combinations built from the
Hurwitz zeta function and the periodic zeta function."""

from __future__ import annotations

from .analysis import (
    A0_REFERENCE,
    SpectralParams,
    find_a0,
    ft_spectral_density,
    lattice_sum,
    scan_real_zeros,
    spectral_density,
    vanishing_check,
)
from .cyclotomic import CyclotomicElement, as_rational, cos_frac, sin_frac
from .errors import (
    ArgumentError,
    BracketError,
    DegradedAccuracyWarning,
    NoClosedFormError,
    NumericOverflowError,
    PoleError,
    ZetaError,
)
from .euler_symbolic import RationalFunctionC, euler_poly, li_neg_euler, li_neg_stirling, substitute_c_cyclotomic
from .exact_core import QPolynomial, bernoulli_number, bernoulli_poly, stirling2
from .exact_value import ExactValue, MixedSymbolic
from .numeric import combined, hurwitz_zeta, periodic_zeta
from .special_values import SYMBOLIC, FunctionTag, RationalPoint, classify_value, exact_value, parse_argument

__version__ = "0.1.0"

__all__ = [
    "A0_REFERENCE", "SpectralParams", "find_a0", "ft_spectral_density", "lattice_sum",
    "scan_real_zeros", "spectral_density", "vanishing_check",
    "CyclotomicElement", "as_rational", "cos_frac", "sin_frac",
    "ArgumentError", "BracketError", "DegradedAccuracyWarning", "NoClosedFormError",
    "NumericOverflowError", "PoleError", "ZetaError",
    "RationalFunctionC", "euler_poly", "li_neg_euler", "li_neg_stirling", "substitute_c_cyclotomic",
    "QPolynomial", "bernoulli_number", "bernoulli_poly", "stirling2",
    "ExactValue", "MixedSymbolic",
    "combined", "hurwitz_zeta", "periodic_zeta",
    "SYMBOLIC", "FunctionTag", "RationalPoint", "classify_value", "exact_value", "parse_argument",
]
