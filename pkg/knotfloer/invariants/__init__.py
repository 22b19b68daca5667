"""Knot invariants read off a bigraded complex: Upsilon and tau."""

from .t_modified import (
    TParameter,
    TEdge,
    TComplex,
    FreeSummand,
    TorsionSummand,
    HomologySummands,
    UpsilonResult,
    edge_exponent,
    specialize,
    reduce,
    is_cycle,
    apply_differential,
    upsilon_value,
    upsilon_at,
    upsilon_pl,
    default_denominator_bound,
    t_grid,
    tau_from_upsilon,
)
from .tau import HatGenerator, FilteredHatComplex, hat_filtered, hat_homology_rank, tau

__all__ = [
    "TParameter",
    "TEdge",
    "TComplex",
    "FreeSummand",
    "TorsionSummand",
    "HomologySummands",
    "UpsilonResult",
    "edge_exponent",
    "specialize",
    "reduce",
    "is_cycle",
    "apply_differential",
    "upsilon_value",
    "upsilon_at",
    "upsilon_pl",
    "default_denominator_bound",
    "t_grid",
    "tau_from_upsilon",
    "HatGenerator",
    "FilteredHatComplex",
    "hat_filtered",
    "hat_homology_rank",
    "tau",
]
