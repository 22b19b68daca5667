"""Grading changes of decorated link cobordism maps from topological data.

The cobordism (W, F) is described only by numbers: the characteristic data
of a Spin^c structure s on W, the Euler characteristic and signature of W,
and for every grading label j the pairings of the capped surface with c_1(s)
and with itself together with the Euler characteristics of the w- and
z-subsurfaces. Nothing here checks that the numbers come from an actual
embedded surface; the module evaluates the grading formulas exactly.

Caller obligations: the ends must be null-homologous for the chosen grading
labels and the coloring must be compatible with them. The Spin^c structures
s_w, s_z and the class PD[Sigma] enter only through the supplied pairings and
`chern_shift`.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.rational_pl import RationalLike, to_rational
from ..utils.errors import DomainError
from ..utils.helpers import format_rational
from ..utils.logging import logger

Label = str


@dataclass(frozen=True)
class ComponentTopology:
    """Per-label data of a cobordism surface.

    Basepoint counts are the number of w (equivalently z) basepoints of the
    label on the incoming and outgoing ends; they are needed only to glue.
    """

    pairing_c1_sigma_j: int = 0
    int_sigma_sigma_j: int = 0
    chi_w_j: int = 0
    chi_z_j: int = 0
    basepoints_in_j: Optional[int] = None
    basepoints_out_j: Optional[int] = None


@dataclass(frozen=True)
class CobordismTopology:
    """Numeric summary of a decorated link cobordism.

    `c1_sq = None` marks a Spin^c structure whose c_1 is not torsion on the
    ends: the Maslov grading changes are then undefined. The totals
    `pairing_c1_sigma` and `int_sigma_sigma` default to the sums over the
    components and must agree with them when given.
    """

    components: Mapping[Label, ComponentTopology]
    c1_sq: Optional[int] = 0
    chi_W: int = 0
    sigma_W: int = 0
    w_in: int = 0
    w_out: int = 0
    z_in: int = 0
    z_out: int = 0
    pairing_c1_sigma: Optional[int] = None
    int_sigma_sigma: Optional[int] = None
    c1_shift_sq: Optional[int] = None

    def __post_init__(self) -> None:
        components = dict(sorted(self.components.items()))
        object.__setattr__(self, "components", components)
        total_pairing = sum(c.pairing_c1_sigma_j for c in components.values())
        total_int = sum(c.int_sigma_sigma_j for c in components.values())
        if self.pairing_c1_sigma is None:
            object.__setattr__(self, "pairing_c1_sigma", total_pairing)
        elif self.pairing_c1_sigma != total_pairing:
            raise DomainError(
                f"<c1, Sigma> = {self.pairing_c1_sigma} but the components sum to {total_pairing}"
            )
        if self.int_sigma_sigma is None:
            object.__setattr__(self, "int_sigma_sigma", total_int)
        elif self.int_sigma_sigma != total_int:
            raise DomainError(
                f"Sigma . Sigma = {self.int_sigma_sigma} but the components sum to {total_int}"
            )
        if self.w_in != self.z_in or self.w_out != self.z_out:
            raise DomainError("w and z basepoint counts must agree on each end")
        for count in (self.w_in, self.w_out):
            if count < 0:
                raise DomainError("basepoint counts must be nonnegative")
        for end, total in (("in", self.w_in), ("out", self.w_out)):
            counts = [getattr(c, f"basepoints_{end}_j") for c in components.values()]
            # totals are only checked when every label gives its count
            if None not in counts and sum(counts) != total:
                raise DomainError(
                    f"w_{end} = {total} but the components carry {sum(counts)} basepoint pair(s)"
                )
        if self.c1_shift_sq is not None and self.c1_sq is not None:
            expected = chern_shift(self.c1_sq, self.pairing_c1_sigma, self.int_sigma_sigma)
            if self.c1_shift_sq != expected:
                raise DomainError(
                    f"c1(s - PD[Sigma])^2 = {self.c1_shift_sq} disagrees with the expansion {expected}"
                )

    @property
    def labels(self) -> Tuple[Label, ...]:
        return tuple(self.components)

    def component(self, j: Label) -> ComponentTopology:
        if j not in self.components:
            raise DomainError(f"unknown grading label '{j}' (known: {', '.join(self.labels)})")
        return self.components[j]

    def chi_w(self) -> int:
        return sum(c.chi_w_j for c in self.components.values())

    def chi_z(self) -> int:
        return sum(c.chi_z_j for c in self.components.values())


def _delta_items(dA: Mapping[Label, Fraction]) -> Iterator[Tuple[Label, Fraction]]:
    return ((j, value) for j, value in sorted(dA.items()) if value != 0)


@dataclass(frozen=True)
class GradingDelta:
    """Changes of the Alexander gradings (per label) and of both Maslov gradings.

    Labels missing from `dA` count as 0; a Maslov delta of None is undefined.
    """

    dA: Mapping[Label, Fraction] = field(default_factory=dict)
    dgr_w: Optional[Fraction] = Fraction(0)
    dgr_z: Optional[Fraction] = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "dA", {j: to_rational(value) for j, value in sorted(self.dA.items())}
        )
        for name in ("dgr_w", "dgr_z"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, to_rational(value))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradingDelta):
            return NotImplemented
        return (
            dict(_delta_items(self.dA)) == dict(_delta_items(other.dA))
            and self.dgr_w == other.dgr_w
            and self.dgr_z == other.dgr_z
        )

    def __hash__(self) -> int:
        return hash((tuple(_delta_items(self.dA)), self.dgr_w, self.dgr_z))

    def __add__(self, other: "GradingDelta") -> "GradingDelta":
        dA: Dict[Label, Fraction] = dict(self.dA)
        for j, value in other.dA.items():
            dA[j] = dA.get(j, Fraction(0)) + value
        return GradingDelta(
            dA,
            _sum_defined(self.dgr_w, other.dgr_w),
            _sum_defined(self.dgr_z, other.dgr_z),
        )

    def alexander(self, j: Label) -> Fraction:
        return self.dA.get(j, Fraction(0))

    def total_alexander(self) -> Fraction:
        return sum(self.dA.values(), Fraction(0))

    def grt(self, t: RationalLike) -> Optional[Fraction]:
        """(1 - t/2) dgr_w + (t/2) dgr_z, or None when either is undefined."""
        if self.dgr_w is None or self.dgr_z is None:
            return None
        half = to_rational(t) / 2
        return (1 - half) * self.dgr_w + half * self.dgr_z


def _sum_defined(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None or b is None:
        return None
    return a + b


def chern_shift(c1_sq: int, pairing_c1_sigma: int, int_sigma_sigma: int) -> int:
    """c_1(s - PD[Sigma])^2 = (c_1 - 2 PD[Sigma])^2 = c1^2 - 4 <c1, Sigma> + 4 Sigma.Sigma."""
    return c1_sq - 4 * pairing_c1_sigma + 4 * int_sigma_sigma


def alexander_change(T: CobordismTopology, j: Label) -> Fraction:
    """(<c1, Sigma_j> - Sigma.Sigma_j) / 2 + (chi(Sigma_w,j) - chi(Sigma_z,j)) / 2."""
    c = T.component(j)
    return Fraction(c.pairing_c1_sigma_j - c.int_sigma_sigma_j, 2) + Fraction(
        c.chi_w_j - c.chi_z_j, 2
    )


def reduced_chi_w(T: CobordismTopology) -> Fraction:
    """chi(Sigma_w) - (|w_in| + |w_out|) / 2."""
    return T.chi_w() - Fraction(T.w_in + T.w_out, 2)


def reduced_chi_z(T: CobordismTopology) -> Fraction:
    """chi(Sigma_z) - (|z_in| + |z_out|) / 2."""
    return T.chi_z() - Fraction(T.z_in + T.z_out, 2)


def _maslov_term(square: int, T: CobordismTopology) -> Fraction:
    return Fraction(square - 2 * T.chi_W - 3 * T.sigma_W, 4)


def shifted_square(T: CobordismTopology) -> Optional[int]:
    """c_1(s - PD[Sigma])^2, supplied or expanded; None when c1^2 is unknown."""
    if T.c1_shift_sq is not None:
        return T.c1_shift_sq
    if T.c1_sq is None:
        return None
    return chern_shift(T.c1_sq, T.pairing_c1_sigma, T.int_sigma_sigma)


def grw_change(T: CobordismTopology) -> Optional[Fraction]:
    """(c1^2 - 2 chi(W) - 3 sigma(W)) / 4 + reduced chi(Sigma_w); None if undefined."""
    if T.c1_sq is None:
        return None
    return _maslov_term(T.c1_sq, T) + reduced_chi_w(T)


def grz_change(T: CobordismTopology) -> Optional[Fraction]:
    """(c1(s - PD[Sigma])^2 - 2 chi(W) - 3 sigma(W)) / 4 + reduced chi(Sigma_z)."""
    square = shifted_square(T)
    if square is None:
        return None
    return _maslov_term(square, T) + reduced_chi_z(T)


def grt_change(T: CobordismTopology, t: RationalLike) -> Optional[Fraction]:
    """Change of gr_t, from the closed form in t.

    The closed form is cross-checked against the convex combination
    (1 - t/2) grw_change + (t/2) grz_change.

    Raises:
        DomainError: t outside [0, 2]
    """
    t = to_rational(t)
    if t < 0 or t > 2:
        raise DomainError(f"t = {format_rational(t)} is outside [0, 2]")
    grw = grw_change(T)
    grz = grz_change(T)
    if grw is None or grz is None:
        return None
    closed = (
        grw
        + t * Fraction(-T.pairing_c1_sigma + T.int_sigma_sigma, 2)
        + t * Fraction(T.chi_z() - T.chi_w(), 2)
    )
    if closed != (1 - t / 2) * grw + (t / 2) * grz:
        raise DomainError("gr_t closed form disagrees with the convex combination")
    return closed


def topology_delta(T: CobordismTopology) -> GradingDelta:
    """Every grading change of a topology evaluated by the closed formulas."""
    return GradingDelta(
        {j: alexander_change(T, j) for j in T.labels},
        grw_change(T),
        grz_change(T),
    )


def variable_action(kind: str, j_var: Label, j: Label) -> Tuple[Fraction, Fraction, Fraction]:
    """(dA_j, dgr_w, dgr_z) of multiplying by U or V of label j_var."""
    delta = Fraction(1) if j_var == j else Fraction(0)
    if kind == "U":
        return -delta, Fraction(-2), Fraction(0)
    if kind == "V":
        return delta, Fraction(0), Fraction(-2)
    raise DomainError(f"unknown variable '{kind}', expected U or V")


def collapse(
    delta: GradingDelta,
    f: Mapping[Label, Label],
    targets: Optional[Sequence[Label]] = None,
) -> GradingDelta:
    """Push the Alexander changes forward along f: dA'_j' = sum over f^-1(j').

    Labels of `targets` without a preimage get 0 (the empty sum).
    """
    dA: Dict[Label, Fraction] = {j: Fraction(0) for j in targets or ()}
    for j, value in delta.dA.items():
        if j not in f:
            raise DomainError(f"collapse map is not defined on label '{j}'")
        dA[f[j]] = dA.get(f[j], Fraction(0)) + value
    return GradingDelta(dA, delta.dgr_w, delta.dgr_z)


def conjugate_delta(delta: GradingDelta) -> GradingDelta:
    """Exchange the roles of w and z: swap the Maslov deltas and negate every dA."""
    return GradingDelta(
        {j: -value for j, value in delta.dA.items()}, delta.dgr_z, delta.dgr_w
    )


def glue(topologies: Sequence[CobordismTopology]) -> CobordismTopology:
    """Aggregate a chain of cobordisms glued end to end.

    Every field adds up, except that each gluing interface removes one arc
    per basepoint pair from chi(Sigma_w) and chi(Sigma_z) of its label.

    Raises:
        DomainError: label sets differ, or outgoing counts of one piece differ
            from incoming counts of the next
    """
    if not topologies:
        raise DomainError("nothing to glue")
    labels = topologies[0].labels
    for T in topologies:
        if T.labels != labels:
            raise DomainError(f"cannot glue cobordisms with labels {labels} and {T.labels}")
        for j, c in T.components.items():
            if c.basepoints_in_j is None or c.basepoints_out_j is None:
                raise DomainError(f"label '{j}' has no basepoint counts; cannot glue")

    for number, (left, right) in enumerate(zip(topologies, topologies[1:]), start=1):
        for j in labels:
            out_count = left.components[j].basepoints_out_j
            in_count = right.components[j].basepoints_in_j
            if out_count != in_count:
                raise DomainError(
                    f"pieces {number} and {number + 1} do not chain on label '{j}': "
                    f"{out_count} basepoint pair(s) out, {in_count} in"
                )

    components: Dict[Label, ComponentTopology] = {}
    for j in labels:
        parts = [T.components[j] for T in topologies]
        interfaces = sum(c.basepoints_out_j for c in parts[:-1])
        components[j] = ComponentTopology(
            pairing_c1_sigma_j=sum(c.pairing_c1_sigma_j for c in parts),
            int_sigma_sigma_j=sum(c.int_sigma_sigma_j for c in parts),
            chi_w_j=sum(c.chi_w_j for c in parts) - interfaces,
            chi_z_j=sum(c.chi_z_j for c in parts) - interfaces,
            basepoints_in_j=parts[0].basepoints_in_j,
            basepoints_out_j=parts[-1].basepoints_out_j,
        )

    squares = [T.c1_sq for T in topologies]
    return CobordismTopology(
        components=components,
        c1_sq=None if any(s is None for s in squares) else sum(squares),
        chi_W=sum(T.chi_W for T in topologies),
        sigma_W=sum(T.sigma_W for T in topologies),
        w_in=topologies[0].w_in,
        w_out=topologies[-1].w_out,
        z_in=topologies[0].z_in,
        z_out=topologies[-1].z_out,
    )


@dataclass(frozen=True)
class KnotMap:
    """The map 1 -> U^u V^v on HFL-infinity, with the two Maslov shifts."""

    d1: Fraction
    d2: Fraction

    @property
    def u_exponent(self) -> Fraction:
        return -self.d1 / 2

    @property
    def v_exponent(self) -> Fraction:
        return -self.d2 / 2

    @property
    def exponents(self) -> Tuple[Fraction, Fraction]:
        return self.u_exponent, self.v_exponent

    def then(self, other: "KnotMap") -> "KnotMap":
        """Composite map: the monomials multiply, so the shifts add."""
        return KnotMap(self.d1 + other.d1, self.d2 + other.d2)


def negdef_knot_map(
    T: CobordismTopology,
    g_w: int,
    g_z: int,
    b1_zero: bool = True,
    b2_plus_zero: bool = True,
    surface_connected: bool = True,
    two_dividing_arcs: bool = True,
) -> KnotMap:
    """The knot cobordism map 1 -> U^(-d1/2) V^(-d2/2) of a negative-definite W.

    d1 = (c1^2 - 2 chi - 3 sigma)/4 - 2 g(Sigma_w) and d2 likewise with
    c1(s - PD[Sigma])^2 and g(Sigma_z). The hypotheses (b_1 = b_2^+ = 0,
    connected surface cut by two arcs into connected Sigma_w and Sigma_z)
    are asserted by the caller through the flags.
    """
    hypotheses = {
        "b_1(W) = 0": b1_zero,
        "b_2^+(W) = 0": b2_plus_zero,
        "Sigma connected": surface_connected,
        "dividing set of two arcs": two_dividing_arcs,
    }
    failed = [name for name, holds in hypotheses.items() if not holds]
    if failed:
        raise DomainError(f"knot cobordism map needs: {', '.join(failed)}")
    if g_w < 0 or g_z < 0:
        raise DomainError("genera must be nonnegative")
    square = shifted_square(T)
    if T.c1_sq is None or square is None:
        raise DomainError("c1^2 is required for the knot cobordism map")
    d1 = _maslov_term(T.c1_sq, T) - 2 * g_w
    d2 = _maslov_term(square, T) - 2 * g_z
    logger.debug(f"negdef_knot_map: d1 = {d1}, d2 = {d2}")
    return KnotMap(d1, d2)


def internal_connected_sum_map(knot_map: KnotMap, g0: int, side: str = "z") -> KnotMap:
    """The map after an internal connected sum with a closed surface Sigma_0.

    Sigma_0 sits in a ball missing Sigma and is summed in at a point of
    Sigma_z (or Sigma_w when side is "w"), taking that type; the map gains
    a factor V^g(Sigma_0) (respectively U^g(Sigma_0)).
    """
    if g0 < 0:
        raise DomainError(f"genus of Sigma_0 must be nonnegative, got {g0}")
    if side == "z":
        return knot_map.then(KnotMap(Fraction(0), Fraction(-2 * g0)))
    if side == "w":
        return knot_map.then(KnotMap(Fraction(-2 * g0), Fraction(0)))
    raise DomainError(f"side must be 'w' or 'z', got '{side}'")


def closed_surface_map(g_w: int, g_z: int) -> Tuple[int, int]:
    """Exponents of 1 -> U^g(Sigma_w) V^g(Sigma_z) for a surface in S^4 minus two balls."""
    if g_w < 0 or g_z < 0:
        raise DomainError("genera must be nonnegative")
    return g_w, g_z


def identity_topology(state: Mapping[Label, int]) -> CobordismTopology:
    """The product cobordism on a link with `state[j]` basepoint pairs on label j."""
    total = sum(state.values())
    return CobordismTopology(
        components={
            j: ComponentTopology(0, 0, k, k, k, k) for j, k in state.items()
        },
        w_in=total,
        w_out=total,
        z_in=total,
        z_out=total,
    )


def with_component(
    T: CobordismTopology, j: Label, **changes: Union[int, None]
) -> CobordismTopology:
    """Copy of T with some fields of one component replaced, totals recomputed."""
    components = dict(T.components)
    components[j] = replace(T.component(j), **changes)
    w_in = sum(c.basepoints_in_j or 0 for c in components.values())
    w_out = sum(c.basepoints_out_j or 0 for c in components.values())
    return replace(
        T,
        components=components,
        w_in=w_in,
        w_out=w_out,
        z_in=w_in,
        z_out=w_out,
        pairing_c1_sigma=None,
        int_sigma_sigma=None,
        c1_shift_sq=None,
    )
