"""The t-modified complex tCFK^- and the Upsilon invariant.

Specializing U -> v^(2-t), V -> v^t with t = m/n and writing x = v^(1/n) turns
a bigraded complex over F2[U, V] into a singly graded complex over the PID
F2[x]. Every differential entry is a single monomial x^e, and homogeneity
pins e down from the gradings of its endpoints, so homology can be read off
by monomial Gaussian elimination: pivot on a minimal exponent, clear its row
and column, record a cyclic summand F2[x]/(x^e), repeat.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.rational_pl import (
    DOMAIN_END,
    DOMAIN_START,
    PLFunction,
    RationalLike,
    pl_eval,
    pl_from_points,
    pl_initial_slope,
    to_rational,
)
from ..complexes.bicomplex import ChainComplexUV, ensure_valid
from ..utils.errors import DomainError, NotAKnotComplexError, ReconstructionError
from ..utils.helpers import format_rational
from ..utils.logging import logger

# A chain is a map generator name -> exponent of x; homogeneity means every
# coefficient of a homogeneous chain is a single monomial.
Chain = Dict[str, int]


@dataclass(frozen=True)
class TParameter:
    """The parameter t = m/n in [0, 2], always stored in lowest terms."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise DomainError("t must be given by integers m/n")
        if self.n < 1 or self.m < 0:
            raise DomainError(f"t = {self.m}/{self.n} needs m >= 0 and n >= 1")
        divisor = gcd(self.m, self.n)
        object.__setattr__(self, "m", self.m // divisor)
        object.__setattr__(self, "n", self.n // divisor)
        if self.value > DOMAIN_END:
            raise DomainError(f"t = {self} is outside [0, 2]")

    @classmethod
    def of(cls, value: Union["TParameter", RationalLike]) -> "TParameter":
        """Coerce a rational (or an existing TParameter) to a TParameter."""
        if isinstance(value, TParameter):
            return value
        rational = to_rational(value)
        if rational < DOMAIN_START or rational > DOMAIN_END:
            raise DomainError(f"t = {format_rational(rational)} is outside [0, 2]")
        return cls(rational.numerator, rational.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.m, self.n)

    def __str__(self) -> str:
        return format_rational(self.value)


@dataclass(frozen=True, order=True)
class TEdge:
    """The entry src -> x^e dst of the specialized differential."""

    src: str
    dst: str
    e: int


@dataclass(frozen=True)
class TComplex:
    """A singly graded complex over F2[x], x = v^(1/n) of gr_t-weight -1/n."""

    generators: Tuple[Tuple[str, Fraction], ...]
    edges: Tuple[TEdge, ...]
    n: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def gradings(self) -> Dict[str, Fraction]:
        return dict(self.generators)

    def differential(self) -> Dict[str, Chain]:
        """The differential as columns: source -> {target: exponent}."""
        columns: Dict[str, Chain] = {name: {} for name, _ in self.generators}
        for edge in self.edges:
            _toggle(columns[edge.src], edge.dst, edge.e)
        return columns


@dataclass(frozen=True)
class FreeSummand:
    """A copy of F2[x] generated by the class of a cycle."""

    representative: Tuple[Tuple[str, int], ...]
    gr_t: Fraction


@dataclass(frozen=True)
class TorsionSummand:
    """A copy of F2[x]/(x^order) generated by the class of a cycle."""

    representative: Tuple[Tuple[str, int], ...]
    gr_t: Fraction
    order: int


@dataclass
class HomologySummands:
    """Homology of a TComplex split into free and cyclic torsion summands."""

    free: List[FreeSummand] = field(default_factory=list)
    torsion: List[TorsionSummand] = field(default_factory=list)

    @property
    def free_rank(self) -> int:
        return len(self.free)

    @property
    def torsion_orders(self) -> List[int]:
        return sorted(summand.order for summand in self.torsion)

    def free_gradings(self) -> List[Fraction]:
        return sorted(summand.gr_t for summand in self.free)


@dataclass(frozen=True)
class UpsilonResult:
    """Upsilon at one t, with the free rank it was read from.

    `flagged` is set when the free rank was not 1 and the maximum was
    returned anyway because non-knot complexes were allowed.
    """

    t: TParameter
    value: Fraction
    free_rank: int
    flagged: bool = False


def _toggle(chain: Chain, name: str, exponent: int) -> None:
    """Add x^exponent * name to a homogeneous chain over F2."""
    current = chain.get(name)
    if current is None:
        chain[name] = exponent
    elif current == exponent:
        del chain[name]
    else:
        raise DomainError(
            f"non-homogeneous chain: coefficient of '{name}' would be "
            f"x^{current} + x^{exponent}"
        )


def _frozen(chain: Chain) -> Tuple[Tuple[str, int], ...]:
    return tuple(sorted(chain.items()))


def edge_exponent(a: int, b: int, t: TParameter) -> int:
    """Exponent of x = v^(1/n) replacing U^a V^b: a(2n - m) + b m."""
    return a * (2 * t.n - t.m) + b * t.m


def specialize(C: ChainComplexUV, t: Union[TParameter, RationalLike]) -> TComplex:
    """Build tCFK^- from C: gr_t = (1 - t/2) gr_w + (t/2) gr_z, U^a V^b -> x^e."""
    t = TParameter.of(t)
    ensure_valid(C)
    half = t.value / 2
    generators = tuple((g.name, (1 - half) * g.gr_w + half * g.gr_z) for g in C.generators)
    edges = tuple(TEdge(e.src, e.dst, edge_exponent(e.a, e.b, t)) for e in C.edges)
    return TComplex(generators, edges, t.n)


def _check_t_complex(T: TComplex) -> Dict[str, Chain]:
    """Homogeneity and d^2 = 0 for a TComplex; returns its differential."""
    gradings = T.gradings()
    if len(gradings) != len(T.generators):
        raise DomainError("duplicate generator names in t-complex")
    for edge in T.edges:
        if edge.src not in gradings or edge.dst not in gradings:
            raise DomainError(f"edge {edge.src} -> {edge.dst} mentions an unknown generator")
        if edge.e < 0:
            raise DomainError(f"edge {edge.src} -> {edge.dst} has negative exponent {edge.e}")
        if gradings[edge.src] - 1 != gradings[edge.dst] - Fraction(edge.e, T.n):
            raise DomainError(
                f"non-homogeneous edge {edge.src} -> x^{edge.e} {edge.dst} "
                f"(gr_t {format_rational(gradings[edge.src])} -> "
                f"{format_rational(gradings[edge.dst])})"
            )
    columns = T.differential()
    for name, column in columns.items():
        if apply_differential(columns, column):
            raise DomainError(f"d^2 is not zero on '{name}'")
    return columns


def apply_differential(columns: Dict[str, Chain], chain: Chain) -> Chain:
    """Image of a chain under the differential given by its columns."""
    image: Chain = {}
    for name, exponent in chain.items():
        for target, edge_exp in columns[name].items():
            _toggle(image, target, exponent + edge_exp)
    return image


def is_cycle(T: TComplex, representative: Union[Chain, Sequence[Tuple[str, int]]]) -> bool:
    """True iff the chain has zero image under the differential of T."""
    return not apply_differential(T.differential(), dict(representative))


def _choose_pivot(columns: Dict[str, Chain]) -> Optional[Tuple[int, str, str]]:
    """Minimal off-diagonal entry as (exponent, src, dst), ties by names."""
    best: Optional[Tuple[int, str, str]] = None
    for src, column in columns.items():
        for dst, exponent in column.items():
            if dst == src:
                continue
            candidate = (exponent, src, dst)
            if best is None or candidate < best:
                best = candidate
    return best


def reduce(T: TComplex) -> HomologySummands:
    """Split the homology of T into free and cyclic torsion summands.

    Each step pivots on a minimal off-diagonal entry s -> x^e d. The basis
    element d is replaced by x^(-e) ds (a cycle), every other column hitting
    d is cleared by adding a multiple of s, and the pair (s, d) then spans a
    summand s -> x^e d that is dropped, leaving torsion of order e when
    e > 0. Generators left at the end carry the free part.

    Raises:
        DomainError: T is not homogeneous or d^2 != 0
    """
    original = _check_t_complex(T)
    gradings = T.gradings()
    columns: Dict[str, Chain] = {name: dict(column) for name, column in original.items()}
    basis: Dict[str, Chain] = {name: {name: 0} for name in columns}
    result = HomologySummands()

    while True:
        pivot = _choose_pivot(columns)
        if pivot is None:
            break
        e_star, s, d = pivot
        logger.debug(f"reduce: pivot {s} -> x^{e_star} {d}")
        boundary = dict(columns[s])

        # d becomes x^(-e*) ds: rewrite every column in the new basis.
        others = {target: f for target, f in boundary.items() if target != d}
        for column in columns.values():
            c_d = column.get(d)
            if c_d is None:
                continue
            for target, f in others.items():
                _toggle(column, target, c_d + f - e_star)
        columns[d] = {}
        new_d: Chain = {}
        for target, f in boundary.items():
            for name, exponent in basis[target].items():
                _toggle(new_d, name, exponent + f - e_star)
        basis[d] = new_d

        # Clear the rest of row d with multiples of s.
        for g in list(columns):
            if g == s:
                continue
            c = columns[g].get(d)
            if c is None:
                continue
            shift = c - e_star
            for target, f in columns[s].items():
                _toggle(columns[g], target, f + shift)
            for column in columns.values():
                c_g = column.get(g)
                if c_g is not None:
                    _toggle(column, s, c_g + shift)
            for name, exponent in basis[s].items():
                _toggle(basis[g], name, exponent + shift)

        if columns[s] != {d: e_star}:
            raise DomainError(f"d^2 is not zero: pivot column '{s}' did not split off")
        for g, column in columns.items():
            if g != s and (s in column or d in column):
                raise DomainError(f"d^2 is not zero: '{g}' still meets the pair ({s}, {d})")

        if e_star > 0:
            result.torsion.append(TorsionSummand(_frozen(basis[d]), gradings[d], e_star))
        for name in (s, d):
            del columns[name]
            del basis[name]

    for name in sorted(columns):
        result.free.append(FreeSummand(_frozen(basis[name]), gradings[name]))

    for summand in [*result.free, *result.torsion]:
        if apply_differential(original, dict(summand.representative)):
            raise DomainError("homology representative is not a cycle")
    logger.debug(
        f"reduce: free rank {result.free_rank}, torsion orders {result.torsion_orders}"
    )
    return result


def upsilon_value(
    C: ChainComplexUV,
    t: Union[TParameter, RationalLike],
    allow_non_knot: bool = False,
) -> UpsilonResult:
    """Maximal gr_t of a free summand of tHFK^-, with its free rank."""
    t = TParameter.of(t)
    summands = reduce(specialize(C, t))
    rank = summands.free_rank
    if rank == 0 or (rank != 1 and not allow_non_knot):
        raise NotAKnotComplexError(rank)
    value = max(summands.free_gradings())
    flagged = rank != 1
    if flagged:
        logger.warning(
            f"free rank is {rank} at t = {t}; returning the maximal grading anyway"
        )
    return UpsilonResult(t, value, rank, flagged)


def upsilon_at(
    C: ChainComplexUV,
    t: Union[TParameter, RationalLike],
    allow_non_knot: bool = False,
) -> Fraction:
    """Upsilon_K(t) read off a knot complex."""
    return upsilon_value(C, t, allow_non_knot).value


def default_denominator_bound(C: ChainComplexUV) -> int:
    """Q = 2 (1 + max |a - b|) over the edges of C."""
    return 2 * (1 + C.max_exponent_spread())


def t_grid(Q: int) -> List[Fraction]:
    """Every reduced p/q in [0, 2] with q <= Q, ascending."""
    if Q < 1:
        raise DomainError(f"denominator bound must be positive, got {Q}")
    return sorted({Fraction(p, q) for q in range(1, Q + 1) for p in range(2 * q + 1)})


def upsilon_pl(
    C: ChainComplexUV,
    Q: Optional[int] = None,
    workers: int = 1,
    allow_non_knot: bool = False,
) -> PLFunction:
    """Upsilon as an exact PL function, fitted on a grid and verified at midpoints.

    Args:
        C: A valid knot complex
        Q: Largest denominator on the grid (default: default_denominator_bound)
        workers: Threads used for the grid evaluations
        allow_non_knot: Forwarded to upsilon_value

    Raises:
        ReconstructionError: the fit misses a midpoint; retry with a larger Q
    """
    ensure_valid(C)
    if Q is None:
        Q = default_denominator_bound(C)
    grid = t_grid(Q)
    midpoints = [(left + right) / 2 for left, right in zip(grid, grid[1:])]
    logger.debug(f"upsilon_pl: Q = {Q}, {len(grid)} grid points, {workers} worker(s)")

    def evaluate(t: Fraction) -> Fraction:
        return upsilon_at(C, t, allow_non_knot)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(evaluate, grid))
            checks = list(pool.map(evaluate, midpoints))
    else:
        values = [evaluate(t) for t in grid]
        checks = [evaluate(t) for t in midpoints]

    fitted = pl_from_points(zip(grid, values))
    for t, expected in zip(midpoints, checks):
        if pl_eval(fitted, t) != expected:
            raise ReconstructionError(
                f"PL fit with Q = {Q} gives {format_rational(pl_eval(fitted, t))} at "
                f"t = {format_rational(t)} but Upsilon is {format_rational(expected)}; "
                f"increase Q"
            )
    logger.upsilon(f"Upsilon reconstructed with {len(fitted.breakpoints)} breakpoints (Q = {Q})")
    return fitted


def tau_from_upsilon(f: PLFunction) -> Fraction:
    """tau as minus the slope of Upsilon near t = 0."""
    return -pl_initial_slope(f)
