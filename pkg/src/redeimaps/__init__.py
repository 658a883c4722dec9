"""Redei rational functions and tangent-Chebyshev maps over finite fields."""

from .cheby import ChebySpec, cheby_coeffs, cheby_combine, cheby_eval
from .ffield import (
    Extension,
    FieldError,
    FiniteField,
    enumerate_alphas,
    is_valid_alpha,
    make_extension,
    make_field,
    mu_generator,
    parse_field_spec,
)
from .projmap import INF, MobiusMap, RationalMap
from .redei import RedeiSpec, redei_coeffs, redei_combine, redei_eval

__all__ = [
    "INF",
    "ChebySpec",
    "Extension",
    "FieldError",
    "FiniteField",
    "MobiusMap",
    "RationalMap",
    "RedeiSpec",
    "cheby_coeffs",
    "cheby_combine",
    "cheby_eval",
    "enumerate_alphas",
    "is_valid_alpha",
    "make_extension",
    "make_field",
    "mu_generator",
    "parse_field_spec",
    "redei_coeffs",
    "redei_combine",
    "redei_eval",
]
