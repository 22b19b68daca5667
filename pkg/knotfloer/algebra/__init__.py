"""Exact algebra: rationals, piecewise-linear functions and F2 linear algebra."""

from .rational_pl import (
    Rational,
    Line,
    PLFunction,
    to_rational,
    pl_from_points,
    pl_zero,
    pl_line,
    pl_eval,
    pl_add,
    pl_neg,
    pl_sub,
    pl_scale,
    pl_max,
    pl_min,
    pl_reflect,
    pl_leq,
    pl_initial_slope,
    pl_upper_envelope,
    pl_sample,
    pl_serialize,
    pl_parse,
)
from .f2 import XorBasis, rank, kernel

__all__ = [
    "Rational",
    "Line",
    "PLFunction",
    "to_rational",
    "pl_from_points",
    "pl_zero",
    "pl_line",
    "pl_eval",
    "pl_add",
    "pl_neg",
    "pl_sub",
    "pl_scale",
    "pl_max",
    "pl_min",
    "pl_reflect",
    "pl_leq",
    "pl_initial_slope",
    "pl_upper_envelope",
    "pl_sample",
    "pl_serialize",
    "pl_parse",
    "XorBasis",
    "rank",
    "kernel",
]
