"""Linear algebra over F2 with vectors packed into Python ints (bit i = basis vector i)."""

from typing import Dict, Iterable, List, Sequence, Tuple


class XorBasis:
    """Incrementally reduced basis of a subspace of F2^n, keyed by leading bit."""

    def __init__(self) -> None:
        self._rows: Dict[int, int] = {}

    def reduce(self, vector: int) -> int:
        """Reduce a vector against the basis; 0 means it lies in the span."""
        while vector:
            lead = vector.bit_length() - 1
            row = self._rows.get(lead)
            if row is None:
                return vector
            vector ^= row
        return 0

    def add(self, vector: int) -> bool:
        """Insert a vector; returns False when it was already in the span."""
        reduced = self.reduce(vector)
        if not reduced:
            return False
        self._rows[reduced.bit_length() - 1] = reduced
        return True

    def __len__(self) -> int:
        return len(self._rows)


def rank(vectors: Iterable[int]) -> int:
    """Dimension of the span of the given vectors."""
    basis = XorBasis()
    for vector in vectors:
        basis.add(vector)
    return len(basis)


def kernel(images: Sequence[int]) -> List[int]:
    """Basis of the kernel of the map sending basis vector i to images[i].

    Plain Gaussian elimination that tracks, for every reduced image, which
    domain vectors were combined to produce it.
    """
    pivots: Dict[int, Tuple[int, int]] = {}
    null_vectors: List[int] = []
    for index, image in enumerate(images):
        combination = 1 << index
        while image:
            lead = image.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (image, combination)
                break
            pivot_image, pivot_combination = pivots[lead]
            image ^= pivot_image
            combination ^= pivot_combination
        if not image:
            null_vectors.append(combination)
    return null_vectors
