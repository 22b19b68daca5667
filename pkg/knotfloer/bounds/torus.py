"""Closed formulas for Upsilon of positive torus knots."""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple

from ..algebra.rational_pl import PLFunction, pl_add, pl_from_points, pl_zero
from ..utils.errors import DomainError
from .negdef import m_t_scalar


@lru_cache(maxsize=None)
def torus_upsilon_adjacent(n: int) -> PLFunction:
    """Upsilon of T(n, n+1): on [2i/n, (2i+2)/n] it is -i(i+1) - n(n-1-2i)t/2.

    At the breakpoint t = 2i/n this evaluates to i(i - n).
    """
    if n < 1:
        raise DomainError(f"T(n, n+1) needs n >= 1, got {n}")
    return pl_from_points((Fraction(2 * i, n), i * (i - n)) for i in range(n + 1))


def _normalized(p: int, q: int) -> Tuple[int, int]:
    if p < 1 or q < 1:
        raise DomainError(f"torus knot parameters must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"T({p}, {q}) is not a knot: gcd = {gcd(p, q)}")
    return min(p, q), max(p, q)


@lru_cache(maxsize=None)
def torus_upsilon(p: int, q: int) -> PLFunction:
    """Upsilon of T(p, q) via Upsilon(T(a, b)) = Upsilon(T(a, b-a)) + Upsilon(T(a, a+1))."""
    a, b = _normalized(p, q)
    if a == 1:
        return pl_zero()
    if b == a + 1:
        return torus_upsilon_adjacent(a)
    return pl_add(torus_upsilon(a, b - a), torus_upsilon_adjacent(a))


def torus_cobordism_bound(a: int, b: int) -> PLFunction:
    """Upsilon(T(a, b-a)) + M_t(a), the lower bound for Upsilon(T(a, b)) with b > a."""
    a, b = _normalized(a, b)
    if b == a:
        raise DomainError(f"the torus-knot cobordism needs b > a, got ({a}, {b})")
    return pl_add(torus_upsilon(a, b - a), m_t_scalar(a))


def is_sharp(a: int, b: int) -> bool:
    """True iff the torus-knot cobordism bound for T(a, b) is attained."""
    return torus_upsilon(a, b) == torus_cobordism_bound(a, b)
