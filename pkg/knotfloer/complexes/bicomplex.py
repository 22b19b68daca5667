"""Bigraded chain complexes over F2[U, V].

A complex is a finite list of generators carrying the two Maslov gradings
(gr_w, gr_z) and a set of monomial differential entries src -> U^a V^b dst.
U has (gr_w, gr_z)-weight (-2, 0) and V has (0, -2); the differential drops
both gradings by one. With A = (gr_w - gr_z) / 2, U lowers A by one and V
raises it by one, so every edge satisfies A(src) - A(dst) = b - a.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..algebra.rational_pl import RationalLike, to_rational
from ..utils.errors import ComplexValidationError
from ..utils.helpers import format_rational


@dataclass(frozen=True)
class Generator:
    """A generator with its two absolute Maslov gradings."""

    name: str
    gr_w: Fraction
    gr_z: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "gr_w", to_rational(self.gr_w))
        object.__setattr__(self, "gr_z", to_rational(self.gr_z))

    @property
    def alexander(self) -> Fraction:
        return alexander(self)


@dataclass(frozen=True, order=True)
class Edge:
    """The differential entry src -> U^a V^b dst (coefficient 1 over F2)."""

    src: str
    dst: str
    a: int
    b: int


@dataclass(frozen=True)
class Violation:
    """One validation failure, with the witness that exhibits it."""

    kind: str
    message: str
    witness: Tuple[object, ...] = ()

    def __str__(self) -> str:
        return f"[{self.kind}] {self.message}"


@dataclass(frozen=True)
class ChainComplexUV:
    """Finitely generated bigraded complex over F2[U, V].

    Generators and edges are stored in canonical order (by name, then by
    (src, dst)) so that structural equality is order independent.
    """

    generators: Tuple[Generator, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "generators", tuple(sorted(self.generators, key=lambda g: g.name))
        )
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def generator_map(self) -> Dict[str, Generator]:
        return {g.name: g for g in self.generators}

    def outgoing(self) -> Dict[str, List[Edge]]:
        """Edges grouped by source."""
        grouped: Dict[str, List[Edge]] = defaultdict(list)
        for edge in self.edges:
            grouped[edge.src].append(edge)
        return grouped

    def max_exponent_spread(self) -> int:
        """max |a - b| over all edges (0 for a complex without edges)."""
        return max((abs(edge.a - edge.b) for edge in self.edges), default=0)


def make_complex(
    generators: Sequence[Tuple[str, RationalLike, RationalLike]],
    edges: Sequence[Tuple[str, str, int, int]] = (),
) -> ChainComplexUV:
    """Convenience constructor from plain tuples."""
    return ChainComplexUV(
        tuple(Generator(name, gr_w, gr_z) for name, gr_w, gr_z in generators),
        tuple(Edge(src, dst, a, b) for src, dst, a, b in edges),
    )


def alexander(g: Generator) -> Fraction:
    """The Alexander grading (gr_w - gr_z) / 2."""
    return (g.gr_w - g.gr_z) / 2


def _check_homogeneity(edge: Edge, src: Generator, dst: Generator) -> List[str]:
    problems = []
    if src.gr_w - 1 != dst.gr_w - 2 * edge.a:
        problems.append(
            f"gr_w: {format_rational(src.gr_w)} - 1 != {format_rational(dst.gr_w)} - 2*{edge.a}"
        )
    if src.gr_z - 1 != dst.gr_z - 2 * edge.b:
        problems.append(
            f"gr_z: {format_rational(src.gr_z)} - 1 != {format_rational(dst.gr_z)} - 2*{edge.b}"
        )
    return problems


def validate(C: ChainComplexUV) -> List[Violation]:
    """Report every violation of the complex's invariants (empty list = valid).

    Checks unique generator names, edge endpoints, nonnegative exponents,
    one entry per ordered generator pair, homogeneity of every edge, and
    d^2 = 0 (each witness is a generator pair plus the total exponent).
    """
    violations: List[Violation] = []

    name_counts = Counter(C.names)
    for name, count in sorted(name_counts.items()):
        if count > 1:
            violations.append(
                Violation("duplicate-generator", f"generator '{name}' appears {count} times", (name,))
            )
    gens = C.generator_map()

    pair_counts = Counter((edge.src, edge.dst) for edge in C.edges)
    for (src, dst), count in sorted(pair_counts.items()):
        if count > 1:
            violations.append(
                Violation(
                    "duplicate-edge",
                    f"{count} differential entries from '{src}' to '{dst}'",
                    (src, dst),
                )
            )

    usable: List[Edge] = []
    for edge in C.edges:
        missing = [n for n in (edge.src, edge.dst) if n not in gens]
        if missing:
            violations.append(
                Violation(
                    "unknown-generator",
                    f"edge {edge.src} -> {edge.dst} mentions unknown generator(s) {', '.join(missing)}",
                    (edge.src, edge.dst),
                )
            )
            continue
        if edge.a < 0 or edge.b < 0:
            violations.append(
                Violation(
                    "negative-exponent",
                    f"edge {edge.src} -> {edge.dst} has exponents U^{edge.a} V^{edge.b}",
                    (edge.src, edge.dst),
                )
            )
            continue
        problems = _check_homogeneity(edge, gens[edge.src], gens[edge.dst])
        if problems:
            violations.append(
                Violation(
                    "homogeneity",
                    f"edge {edge.src} -> {edge.dst} (U^{edge.a} V^{edge.b}) is not homogeneous: "
                    + "; ".join(problems),
                    (edge.src, edge.dst),
                )
            )
        usable.append(edge)

    outgoing: Dict[str, List[Edge]] = defaultdict(list)
    for edge in usable:
        outgoing[edge.src].append(edge)
    for source in sorted(outgoing):
        paths: Counter = Counter()
        for first in outgoing[source]:
            for second in outgoing.get(first.dst, []):
                paths[(second.dst, first.a + second.a, first.b + second.b)] += 1
        for (target, a, b), count in sorted(paths.items()):
            if count % 2:
                violations.append(
                    Violation(
                        "d-squared",
                        f"d^2({source}) has coefficient U^{a} V^{b} on '{target}'",
                        (source, target, a, b),
                    )
                )
    return violations


def ensure_valid(C: ChainComplexUV) -> ChainComplexUV:
    """Return C unchanged, or raise ComplexValidationError with all violations."""
    violations = validate(C)
    if violations:
        raise ComplexValidationError(violations)
    return C


def conjugate(C: ChainComplexUV) -> ChainComplexUV:
    """Swap gr_w <-> gr_z on generators and U <-> V on edges."""
    ensure_valid(C)
    return ChainComplexUV(
        tuple(replace(g, gr_w=g.gr_z, gr_z=g.gr_w) for g in C.generators),
        tuple(Edge(e.src, e.dst, e.b, e.a) for e in C.edges),
    )


def relabel(C: ChainComplexUV, names: Dict[str, str]) -> ChainComplexUV:
    """Rename generators; names missing from the mapping are kept."""
    return ChainComplexUV(
        tuple(replace(g, name=names.get(g.name, g.name)) for g in C.generators),
        tuple(
            Edge(names.get(e.src, e.src), names.get(e.dst, e.dst), e.a, e.b) for e in C.edges
        ),
    )
