"""Model complexes: unknot, trefoil, figure-eight and torus-knot staircases."""

from fractions import Fraction
from math import gcd
from typing import List, Tuple

from ..utils.errors import DomainError
from ..utils.logging import logger
from .bicomplex import ChainComplexUV, Edge, Generator, make_complex


def unknot() -> ChainComplexUV:
    """One generator in bigrading (0, 0) and no differential."""
    return make_complex([("x", 0, 0)])


def trefoil() -> ChainComplexUV:
    """The right-handed trefoil: d b = U a + V c."""
    return make_complex(
        [("a", 0, -2), ("b", -1, -1), ("c", -2, 0)],
        [("b", "a", 1, 0), ("b", "c", 0, 1)],
    )


def figure_eight() -> ChainComplexUV:
    """The figure-eight knot: an isolated (0, 0) generator plus an acyclic box.

    Box: d x = U y + V z, d y = V w, d z = U w, with A(y) = 1, A(z) = -1.
    """
    return make_complex(
        [
            ("e", 0, 0),
            ("x", 0, 0),
            ("y", 1, -1),
            ("z", -1, 1),
            ("w", 0, 0),
        ],
        [
            ("x", "y", 1, 0),
            ("x", "z", 0, 1),
            ("y", "w", 0, 1),
            ("z", "w", 1, 0),
        ],
    )


def semigroup_alexander_exponents(p: int, q: int) -> List[int]:
    """Exponents of the nonzero terms of the Alexander polynomial of T(p, q), descending.

    With S the numerical semigroup generated by p and q, the polynomial is
    (1 - t) * sum_{s in S} t^s truncated at the conductor 2g, so the
    coefficient of t^k is [k in S] - [k - 1 in S].
    """
    conductor = (p - 1) * (q - 1)
    members = {i * p + j * q for i in range(q) for j in range(p) if i * p + j * q <= conductor}
    exponents = [
        k for k in range(conductor + 1) if (k in members) != (k - 1 in members)
    ]
    return sorted(exponents, reverse=True)


def _corner_name(index: int) -> str:
    """Spreadsheet-style names: a, b, ..., z, aa, ab, ..."""
    name = ""
    index += 1
    while index:
        index, remainder = divmod(index - 1, 26)
        name = chr(ord("a") + remainder) + name
    return name


def staircase_torus_knot(p: int, q: int) -> ChainComplexUV:
    """Staircase complex of the positive torus knot T(p, q), 0 < p < q coprime.

    Generators alternate between outer corners (cycles, even positions) and
    inner corners; inner corner 2i+1 maps by U^alpha to corner 2i and by
    V^beta to corner 2i+2, where alpha and beta are the gaps between
    consecutive Alexander exponents. The top generator sits in gr_w = 0.
    """
    if p < 1 or p >= q:
        raise DomainError(f"staircase needs 0 < p < q, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"T({p}, {q}) is not a knot: gcd = {gcd(p, q)}")

    genus = (p - 1) * (q - 1) // 2
    alexanders = [k - genus for k in semigroup_alexander_exponents(p, q)]
    names = [_corner_name(i) for i in range(len(alexanders))]

    gr_w: List[Fraction] = [Fraction(0)]
    edges: List[Edge] = []
    for index in range(1, len(alexanders)):
        step = alexanders[index - 1] - alexanders[index]
        if index % 2:
            # inner corner: U^step back to the previous outer corner
            gr_w.append(gr_w[-1] - 2 * step + 1)
            edges.append(Edge(names[index], names[index - 1], step, 0))
        else:
            gr_w.append(gr_w[-1] - 1)
            edges.append(Edge(names[index - 1], names[index], 0, step))

    generators: Tuple[Generator, ...] = tuple(
        Generator(name, w, w - 2 * alexander)
        for name, w, alexander in zip(names, gr_w, alexanders)
    )
    logger.debug(f"Staircase T({p},{q}): {len(generators)} generators, steps {[e.a + e.b for e in edges]}")
    return ChainComplexUV(generators, tuple(edges))
