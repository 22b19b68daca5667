"""tau(K) from the Alexander filtration on the hat complex.

Setting U = 0 keeps the edges with no U power. On those edges the Alexander
grading never increases, so F_s = span{g : A(g) <= s} is a subcomplex, and
tau is the least s at which F_s carries the generator of the total homology.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..algebra.f2 import XorBasis, kernel
from ..complexes.bicomplex import ChainComplexUV, ensure_valid
from ..utils.errors import NotAKnotComplexError
from ..utils.helpers import format_rational
from ..utils.logging import logger


@dataclass(frozen=True)
class HatGenerator:
    name: str
    alexander: Fraction
    gr_w: Fraction


@dataclass(frozen=True)
class FilteredHatComplex:
    """The hat complex over F2 with its Alexander filtration."""

    generators: Tuple[HatGenerator, ...]
    edges: Tuple[Tuple[str, str], ...]

    def ordered(self) -> List[HatGenerator]:
        """Generators by (A, name): every F_s is a prefix of this list."""
        return sorted(self.generators, key=lambda g: (g.alexander, g.name))

    def levels(self) -> List[Fraction]:
        return sorted({g.alexander for g in self.generators})


def hat_filtered(C: ChainComplexUV) -> FilteredHatComplex:
    """Keep the edges with a = 0 and forget their V powers."""
    ensure_valid(C)
    return FilteredHatComplex(
        tuple(HatGenerator(g.name, g.alexander, g.gr_w) for g in C.generators),
        tuple((e.src, e.dst) for e in C.edges if e.a == 0),
    )


def _boundary_images(H: FilteredHatComplex, order: List[HatGenerator]) -> List[int]:
    index: Dict[str, int] = {g.name: i for i, g in enumerate(order)}
    images = [0] * len(order)
    for src, dst in H.edges:
        images[index[src]] ^= 1 << index[dst]
    return images


def hat_homology_rank(H: FilteredHatComplex) -> int:
    """dim H_*(hat complex) = n - 2 rank(d)."""
    order = H.ordered()
    images = _boundary_images(H, order)
    boundaries = XorBasis()
    for image in images:
        boundaries.add(image)
    return len(order) - 2 * len(boundaries)


def tau(C: ChainComplexUV) -> Fraction:
    """The least Alexander level s with H(F_s) -> HF-hat(S^3) nontrivial.

    Raises:
        NotAKnotComplexError: the hat homology does not have rank 1
    """
    H = hat_filtered(C)
    order = H.ordered()
    images = _boundary_images(H, order)

    boundaries = XorBasis()
    for image in images:
        boundaries.add(image)
    total_rank = len(order) - 2 * len(boundaries)
    if total_rank != 1:
        raise NotAKnotComplexError(total_rank, "hat homology rank")

    prefix = 0
    for level in H.levels():
        while prefix < len(order) and order[prefix].alexander <= level:
            prefix += 1
        # edges never raise A, so the first `prefix` images lie in F_s
        for cycle in kernel(images[:prefix]):
            if boundaries.reduce(cycle):
                logger.debug(f"tau: F_s carries the top class at s = {format_rational(level)}")
                return level
    raise NotAKnotComplexError(0, "rank of the filtered inclusion")
