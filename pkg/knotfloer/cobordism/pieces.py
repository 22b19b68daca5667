"""Elementary decorated cobordism pieces and their composition.

Each piece acts on one grading label j0 of a link whose state is the number
of basepoint pairs per label. Its topology is the product cobordism on every
other label plus the local change below; the grading formulas on that
topology reproduce the piece's fixed grading change.

    kind        chi(Sigma_w,j0)  chi(Sigma_z,j0)  pairs out  chi(W)
    QuasiStabS  k + 1            k                k + 1      0
    QuasiStabT  k                k + 1            k + 1      0
    BandW       k - 1            k                k          0
    BandZ       k                k - 1            k          0
    DiskStab    k + 1            k + 1            k + 1      0
    Handle0     k + 1            k + 1            k + 1      1
    Handle4     k                k                k - 1      1
    Handle1/3   k                k                k          -1
    Handle2     k                k                k          1, with user data
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..constants import DEFAULT_KNOT_LABEL
from ..utils.errors import DomainError, VerificationError
from ..utils.logging import logger
from .gradings import (
    CobordismTopology,
    GradingDelta,
    Label,
    glue,
    identity_topology,
    topology_delta,
    with_component,
)

HALF = Fraction(1, 2)


class PieceKind(Enum):
    QUASI_STAB_S = "QuasiStabS"
    QUASI_STAB_T = "QuasiStabT"
    BAND_W = "BandW"
    BAND_Z = "BandZ"
    DISK_STAB = "DiskStab"
    HANDLE_0 = "Handle0"
    HANDLE_1 = "Handle1"
    HANDLE_2 = "Handle2"
    HANDLE_3 = "Handle3"
    HANDLE_4 = "Handle4"

    @classmethod
    def parse(cls, text: str) -> "PieceKind":
        for kind in cls:
            if kind.value.lower() == text.lower():
                return kind
        known = ", ".join(kind.value for kind in cls)
        raise DomainError(f"unknown piece kind '{text}' (known: {known})")


# (dA at j0, dgr_w, dgr_z) fixed by the kind
_FIXED_DELTAS: Dict[PieceKind, Tuple[Fraction, Fraction, Fraction]] = {
    PieceKind.QUASI_STAB_S: (HALF, HALF, -HALF),
    PieceKind.QUASI_STAB_T: (-HALF, -HALF, HALF),
    PieceKind.BAND_Z: (HALF, Fraction(0), Fraction(-1)),
    PieceKind.BAND_W: (-HALF, Fraction(-1), Fraction(0)),
    PieceKind.DISK_STAB: (Fraction(0), HALF, HALF),
    PieceKind.HANDLE_0: (Fraction(0), Fraction(0), Fraction(0)),
    PieceKind.HANDLE_4: (Fraction(0), Fraction(0), Fraction(0)),
}

# (chi_w offset, chi_z offset, pairs-out offset, chi(W)) relative to the product
_LOCAL_CHANGES: Dict[PieceKind, Tuple[int, int, int, int]] = {
    PieceKind.QUASI_STAB_S: (1, 0, 1, 0),
    PieceKind.QUASI_STAB_T: (0, 1, 1, 0),
    PieceKind.BAND_W: (-1, 0, 0, 0),
    PieceKind.BAND_Z: (0, -1, 0, 0),
    PieceKind.DISK_STAB: (1, 1, 1, 0),
    PieceKind.HANDLE_0: (1, 1, 1, 1),
    PieceKind.HANDLE_4: (0, 0, -1, 1),
    PieceKind.HANDLE_1: (0, 0, 0, -1),
    PieceKind.HANDLE_2: (0, 0, 0, 1),
    PieceKind.HANDLE_3: (0, 0, 0, -1),
}


@dataclass(frozen=True)
class ElementaryPiece:
    """One elementary piece acting at grading label `label`.

    Only 2-handles carry homological data: the change of c1^2, the
    signature, and per label the pairings <c1, Sigma_j> and Sigma.Sigma_j.
    """

    kind: PieceKind
    label: Label = DEFAULT_KNOT_LABEL
    c1_sq: int = 0
    sigma: int = 0
    pairings: Mapping[Label, int] = field(default_factory=dict)
    intersections: Mapping[Label, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind is not PieceKind.HANDLE_2 and (
            self.c1_sq or self.sigma or any(self.pairings.values()) or any(self.intersections.values())
        ):
            raise DomainError(f"{self.kind.value} carries no homological data")

    def __hash__(self) -> int:
        return hash(
            (
                self.kind,
                self.label,
                self.c1_sq,
                self.sigma,
                tuple(sorted(self.pairings.items())),
                tuple(sorted(self.intersections.items())),
            )
        )


def piece_topology(piece: ElementaryPiece, state: Mapping[Label, int]) -> CobordismTopology:
    """Topology of a piece applied to a link with `state[j]` basepoint pairs per label.

    Raises:
        DomainError: unknown label, or the piece needs a basepoint pair that is not there
    """
    if piece.label not in state:
        raise DomainError(f"piece {piece.kind.value} acts on unknown label '{piece.label}'")
    k = state[piece.label]
    if k < 1 and piece.kind is not PieceKind.HANDLE_0:
        raise DomainError(
            f"piece {piece.kind.value} needs a basepoint pair on label '{piece.label}'"
        )
    for j in [*piece.pairings, *piece.intersections]:
        if j not in state:
            raise DomainError(f"2-handle data mentions unknown label '{j}'")

    dw, dz, dout, chi_W = _LOCAL_CHANGES[piece.kind]
    T = with_component(
        identity_topology(state),
        piece.label,
        chi_w_j=k + dw,
        chi_z_j=k + dz,
        basepoints_out_j=k + dout,
    )
    if piece.kind is PieceKind.HANDLE_2:
        for j in state:
            T = with_component(
                T,
                j,
                pairing_c1_sigma_j=piece.pairings.get(j, 0),
                int_sigma_sigma_j=piece.intersections.get(j, 0),
            )
    return CobordismTopology(
        components=T.components,
        c1_sq=piece.c1_sq,
        chi_W=chi_W,
        sigma_W=piece.sigma,
        w_in=T.w_in,
        w_out=T.w_out,
        z_in=T.z_in,
        z_out=T.z_out,
    )


def next_state(piece: ElementaryPiece, state: Mapping[Label, int]) -> Dict[Label, int]:
    """Basepoint pairs per label after the piece."""
    updated = dict(state)
    updated[piece.label] = state[piece.label] + _LOCAL_CHANGES[piece.kind][2]
    return updated


def piece_delta(piece: ElementaryPiece) -> GradingDelta:
    """The grading change of a piece.

    Stabilizations, bands and 0/4-handles have fixed changes; 1-, 2- and
    3-handles are evaluated by the closed formulas on their own topology.
    """
    fixed = _FIXED_DELTAS.get(piece.kind)
    if fixed is not None:
        dA, dgr_w, dgr_z = fixed
        return GradingDelta({piece.label: dA}, dgr_w, dgr_z)
    labels = {piece.label, *piece.pairings, *piece.intersections}
    return topology_delta(piece_topology(piece, {j: 1 for j in labels}))


@dataclass
class Composition:
    """Result of composing pieces: summed delta, aggregate topology, end state."""

    delta: GradingDelta
    topology: CobordismTopology
    final_state: Dict[Label, int]


def compose(
    pieces: Sequence[ElementaryPiece],
    initial_state: Optional[Mapping[Label, int]] = None,
) -> Tuple[GradingDelta, CobordismTopology]:
    """Sum the piece deltas and glue the piece topologies.

    The summed delta must equal the closed formulas on the aggregate.

    Raises:
        DomainError: a piece does not chain with the link state
        VerificationError: the summed delta disagrees with the aggregate
    """
    result = compose_detailed(pieces, initial_state)
    return result.delta, result.topology


def compose_detailed(
    pieces: Sequence[ElementaryPiece],
    initial_state: Optional[Mapping[Label, int]] = None,
) -> Composition:
    state: Dict[Label, int] = dict(initial_state or {DEFAULT_KNOT_LABEL: 1})
    topologies: List[CobordismTopology] = [identity_topology(state)]
    total = GradingDelta({j: 0 for j in state})
    for number, piece in enumerate(pieces, start=1):
        try:
            topologies.append(piece_topology(piece, state))
        except DomainError as e:
            raise DomainError(f"piece {number}: {e}") from e
        total = total + piece_delta(piece)
        state = next_state(piece, state)

    aggregate = glue(topologies)
    expected = topology_delta(aggregate)
    if total != expected:
        raise VerificationError(
            f"summed piece deltas {total} disagree with the aggregate formulas {expected}"
        )
    logger.debug(f"compose: {len(pieces)} piece(s), final state {state}")
    return Composition(total, aggregate, state)
