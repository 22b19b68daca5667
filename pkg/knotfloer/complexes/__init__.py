"""Bigraded chain complexes over F2[U, V]: model, fixtures and the kfc format."""

from .bicomplex import (
    Generator,
    Edge,
    Violation,
    ChainComplexUV,
    make_complex,
    alexander,
    validate,
    ensure_valid,
    conjugate,
    relabel,
)
from .fixtures import (
    unknot,
    trefoil,
    figure_eight,
    staircase_torus_knot,
    semigroup_alexander_exponents,
)
from .kfc import parse, serialize, read_complex

__all__ = [
    "Generator",
    "Edge",
    "Violation",
    "ChainComplexUV",
    "make_complex",
    "alexander",
    "validate",
    "ensure_valid",
    "conjugate",
    "relabel",
    "unknot",
    "trefoil",
    "figure_eight",
    "staircase_torus_knot",
    "semigroup_alexander_exponents",
    "parse",
    "serialize",
    "read_complex",
]
