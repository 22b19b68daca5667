"""Grading changes of decorated link cobordisms: formulas, pieces and file formats."""

from .gradings import (
    Label,
    ComponentTopology,
    CobordismTopology,
    GradingDelta,
    KnotMap,
    chern_shift,
    alexander_change,
    reduced_chi_w,
    reduced_chi_z,
    shifted_square,
    grw_change,
    grz_change,
    grt_change,
    topology_delta,
    variable_action,
    collapse,
    conjugate_delta,
    glue,
    identity_topology,
    with_component,
    negdef_knot_map,
    internal_connected_sum_map,
    closed_surface_map,
)
from .pieces import (
    PieceKind,
    ElementaryPiece,
    Composition,
    piece_topology,
    piece_delta,
    next_state,
    compose,
    compose_detailed,
)
from .formats import (
    parse_pieces,
    parse_topology,
    read_pieces,
    read_topology,
    format_delta,
)

__all__ = [
    "Label",
    "ComponentTopology",
    "CobordismTopology",
    "GradingDelta",
    "KnotMap",
    "chern_shift",
    "alexander_change",
    "reduced_chi_w",
    "reduced_chi_z",
    "shifted_square",
    "grw_change",
    "grz_change",
    "grt_change",
    "topology_delta",
    "variable_action",
    "collapse",
    "conjugate_delta",
    "glue",
    "identity_topology",
    "with_component",
    "negdef_knot_map",
    "internal_connected_sum_map",
    "closed_surface_map",
    "PieceKind",
    "ElementaryPiece",
    "Composition",
    "piece_topology",
    "piece_delta",
    "next_state",
    "compose",
    "compose_detailed",
    "parse_pieces",
    "parse_topology",
    "read_pieces",
    "read_topology",
    "format_delta",
]
