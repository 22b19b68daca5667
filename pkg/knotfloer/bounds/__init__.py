"""Upsilon and tau bounds from negative-definite cobordisms, plus torus-knot formulas."""

from .negdef import (
    HomologyClass,
    CharVector,
    as_class,
    l1_norm,
    self_intersection,
    m_t_line,
    m_t_scalar,
    m_t_class,
    m_t_charvec,
    genus_kink,
    upsilon_lower_bound,
    tau_upper_bound,
    crossing_change_bounds,
    genus_bounds,
    tau_interval,
)
from .torus import torus_upsilon_adjacent, torus_upsilon, torus_cobordism_bound, is_sharp

__all__ = [
    "HomologyClass",
    "CharVector",
    "as_class",
    "l1_norm",
    "self_intersection",
    "m_t_line",
    "m_t_scalar",
    "m_t_class",
    "m_t_charvec",
    "genus_kink",
    "upsilon_lower_bound",
    "tau_upper_bound",
    "crossing_change_bounds",
    "genus_bounds",
    "tau_interval",
    "torus_upsilon_adjacent",
    "torus_upsilon",
    "torus_cobordism_bound",
    "is_sharp",
]
