"""Application wiring and identity suites for knotfloer."""

from .application import KnotFloer, create_application
from .verify import (
    SuiteResult,
    Verifier,
    create_verifier,
    knot_fixtures,
    random_piece_sequence,
    random_topology,
)

__all__ = [
    "KnotFloer",
    "create_application",
    "SuiteResult",
    "Verifier",
    "create_verifier",
    "knot_fixtures",
    "random_piece_sequence",
    "random_topology",
]
