"""Bounds from negative-definite cobordisms.

A surface Sigma in a negative-definite W (b_1 = b_2^+ = 0) is recorded by its
coordinates in an orthonormal basis e_1, ..., e_n of H_2(W), with
e_i . e_j = -delta_ij. The correction term M_t([Sigma]) is the upper
envelope of finitely many lines, so every bound below is an exact PL function.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence, Tuple, Union

from ..algebra.rational_pl import (
    Line,
    PLFunction,
    RationalLike,
    pl_add,
    pl_line,
    pl_max,
    pl_scale,
    pl_sub,
    pl_upper_envelope,
    pl_zero,
    to_rational,
)
from ..utils.errors import DomainError
from ..utils.logging import logger


@dataclass(frozen=True)
class HomologyClass:
    """Coordinates s_1, ..., s_n of [Sigma] in an orthonormal basis."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        for value in coeffs:
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(
                    f"homology class coordinates must be integers in an orthonormal basis, got {value!r}"
                )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def l1_norm(self) -> int:
        return l1_norm(self)

    @property
    def self_intersection(self) -> int:
        return self_intersection(self)


@dataclass(frozen=True)
class CharVector:
    """A characteristic vector: odd coordinates a_1, ..., a_n."""

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        if any(a % 2 == 0 for a in coords):
            raise DomainError(f"characteristic vector needs odd coordinates, got {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def square(self) -> int:
        """C^2 = -sum a_i^2."""
        return -sum(a * a for a in self.coords)

    def pairing(self, S: HomologyClass) -> int:
        """<C, [Sigma]> = -sum a_i s_i."""
        if len(S.coeffs) != len(self.coords):
            raise DomainError("characteristic vector and class have different ranks")
        return -sum(a * s for a, s in zip(self.coords, S.coeffs))


ClassLike = Union[HomologyClass, Sequence[int]]


def as_class(S: ClassLike) -> HomologyClass:
    """Accept a HomologyClass or a plain integer sequence."""
    if isinstance(S, HomologyClass):
        return S
    return HomologyClass(tuple(S))


def l1_norm(S: ClassLike) -> int:
    """|[Sigma]| = sum |s_i|."""
    return sum(abs(s) for s in as_class(S).coeffs)


def self_intersection(S: ClassLike) -> int:
    """[Sigma] . [Sigma] = -sum s_i^2."""
    return -sum(s * s for s in as_class(S).coeffs)


def _odd_window(s: int) -> range:
    """Odd a with |a| <= 2|s| + 1; the maximizing a always lies here."""
    bound = 2 * abs(s) + 1
    return range(-bound, bound + 1, 2)


def m_t_line(a: int, s: int) -> Line:
    """F_a(t) = (-a^2 + 1 + 2ast - 2s^2 t) / 4."""
    return Line(Fraction(2 * a * s - 2 * s * s, 4), Fraction(1 - a * a, 4))


@lru_cache(maxsize=None)
def m_t_scalar(s: int) -> PLFunction:
    """M_t(s): the upper envelope of F_a over odd a."""
    return pl_upper_envelope([m_t_line(a, s) for a in _odd_window(s)])


def m_t_class(S: ClassLike) -> PLFunction:
    """M_t([Sigma]) as the sum of the coordinatewise M_t(s_i)."""
    total = pl_zero()
    for s in as_class(S).coeffs:
        total = pl_add(total, m_t_scalar(s))
    return total


def _charvec_lines(S: HomologyClass) -> Iterable[Line]:
    n = len(S.coeffs)
    sigma_sq = self_intersection(S)
    seen = set()
    for coords in product(*(_odd_window(s) for s in S.coeffs)):
        C = CharVector(coords)
        line = Line(
            Fraction(-2 * C.pairing(S) + 2 * sigma_sq, 4),
            Fraction(C.square + n, 4),
        )
        if line not in seen:
            seen.add(line)
            yield line


def m_t_charvec(S: ClassLike) -> PLFunction:
    """M_t([Sigma]) as a maximum over characteristic vectors.

    (C^2 + b_2 - 2t <C, Sigma> + 2t Sigma.Sigma) / 4, maximized jointly over
    every C whose coordinates lie in the odd windows of the s_i.
    """
    S = as_class(S)
    if not S.coeffs:
        return pl_zero()
    lines = list(_charvec_lines(S))
    logger.debug(f"m_t_charvec: {len(lines)} distinct lines for {list(S.coeffs)}")
    return pl_upper_envelope(lines)


def genus_kink() -> PLFunction:
    """|t - 1| - 1 on [0, 2], built as max(-t, t - 2)."""
    return pl_max(pl_line(Line(-1, 0)), pl_line(Line(1, -2)))


def upsilon_lower_bound(upsilon_K1: PLFunction, S: ClassLike, g: int) -> PLFunction:
    """Upsilon_K2 >= Upsilon_K1 + M_t([Sigma]) + g (|t - 1| - 1)."""
    if g < 0:
        raise DomainError(f"genus must be nonnegative, got {g}")
    bound = pl_add(upsilon_K1, m_t_class(S))
    return pl_add(bound, pl_scale(genus_kink(), g))


def tau_upper_bound(tau_K1: RationalLike, S: ClassLike, g: int) -> Fraction:
    """tau(K2) <= tau(K1) - (|[Sigma]| + [Sigma].[Sigma]) / 2 + g."""
    if g < 0:
        raise DomainError(f"genus must be nonnegative, got {g}")
    S = as_class(S)
    return to_rational(tau_K1) - Fraction(l1_norm(S) + self_intersection(S), 2) + g


def crossing_change_bounds(upsilon_Kplus: PLFunction) -> Tuple[PLFunction, PLFunction]:
    """Upsilon_{K+} <= Upsilon_{K-} <= Upsilon_{K+} + 1 - |t - 1|.

    The lower bound is the blow-up cobordism with [Sigma] = 0; the upper one
    comes from the reverse cobordism with [Sigma] = 2E.
    """
    lower = upsilon_lower_bound(upsilon_Kplus, [], 0)
    upper = pl_sub(upsilon_Kplus, upsilon_lower_bound(pl_zero(), [2], 0))
    return lower, upper


def genus_bounds(upsilon_K1: PLFunction, g: int) -> Tuple[PLFunction, PLFunction]:
    """Band Upsilon_K1 -/+ g (1 - |t - 1|) for a genus-g rational homology cobordism."""
    lower = upsilon_lower_bound(upsilon_K1, [], g)
    upper = pl_sub(upsilon_K1, pl_scale(genus_kink(), g))
    return lower, upper


def tau_interval(tau_K1: RationalLike, g: int) -> Tuple[Fraction, Fraction]:
    """[tau1 - g, tau1 + g], the tau bound applied in both directions with Sigma = 0."""
    tau_K1 = to_rational(tau_K1)
    upper = tau_upper_bound(tau_K1, [], g)
    return 2 * tau_K1 - upper, upper

