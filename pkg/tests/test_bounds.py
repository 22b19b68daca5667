"""Tests for M_t, the negative-definite bounds and the torus-knot formulas."""

import random
from fractions import Fraction
from itertools import product

import pytest

from knotfloer.algebra import pl_add, pl_from_points, pl_leq, pl_sub, pl_zero
from knotfloer.bounds import (
    CharVector,
    HomologyClass,
    crossing_change_bounds,
    genus_bounds,
    genus_kink,
    is_sharp,
    l1_norm,
    m_t_charvec,
    m_t_class,
    m_t_scalar,
    self_intersection,
    tau_interval,
    tau_upper_bound,
    torus_cobordism_bound,
    torus_upsilon,
    torus_upsilon_adjacent,
    upsilon_lower_bound,
)
from knotfloer.algebra.rational_pl import pl_initial_slope
from knotfloer.invariants import t_grid
from knotfloer.utils.errors import DomainError

TREFOIL = pl_from_points([(0, 0), (1, -1), (2, 0)])


def brute_force_m_t(s: int, t: Fraction) -> Fraction:
    return max(
        Fraction(-a * a + 1 + 2 * a * s * t - 2 * s * s * t, 4) for a in range(-41, 42, 2)
    )


class TestMt:
    def test_small_values(self):
        assert m_t_scalar(0) == pl_zero()
        assert m_t_scalar(1) == pl_zero()
        assert m_t_scalar(2) == TREFOIL
        assert m_t_scalar(-2) == TREFOIL

    @pytest.mark.parametrize("s", range(-6, 7))
    def test_matches_brute_force(self, s):
        f = m_t_scalar(s)
        for t in t_grid(8):
            assert f(t) == brute_force_m_t(s, t)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_sharp_on_adjacent_torus_knots(self, n):
        assert m_t_scalar(n) == torus_upsilon_adjacent(n)

    def test_class_is_coordinatewise_sum(self):
        assert m_t_class([2, -1]) == m_t_scalar(2)
        assert m_t_class([]) == pl_zero()
        assert m_t_class(HomologyClass((2, 2))) == pl_add(TREFOIL, TREFOIL)

    def test_characteristic_vectors_agree_exhaustively(self):
        for size in range(4):
            for coeffs in product(range(-4, 5), repeat=size):
                assert m_t_charvec(coeffs) == m_t_class(coeffs)

    def test_invalid_inputs(self):
        with pytest.raises(DomainError):
            HomologyClass((1, Fraction(1, 2)))
        with pytest.raises(DomainError):
            CharVector((1, 2))
        with pytest.raises(DomainError):
            CharVector((1,)).pairing(HomologyClass((1, 1)))

    def test_class_numbers(self):
        S = HomologyClass((2, -1))
        assert (S.l1_norm, S.self_intersection) == (3, -5)
        assert l1_norm([3, 0, -4]) == 7
        assert self_intersection([3, 0, -4]) == -25
        C = CharVector((1, -3))
        assert C.square == -10
        assert C.pairing(S) == -5


class TestNegativeDefiniteBounds:
    def test_genus_kink(self):
        assert genus_kink() == pl_from_points([(0, 0), (1, -1), (2, 0)])

    def test_upsilon_bound(self):
        bound = upsilon_lower_bound(TREFOIL, [2], 1)
        assert bound == pl_from_points([(0, 0), (1, -3), (2, 0)])
        assert upsilon_lower_bound(TREFOIL, [], 0) == TREFOIL
        with pytest.raises(DomainError):
            upsilon_lower_bound(TREFOIL, [], -1)

    def test_tau_bound(self):
        assert tau_upper_bound(1, [2, -1], 1) == 3
        assert tau_upper_bound(0, [], 0) == 0
        with pytest.raises(DomainError):
            tau_upper_bound(0, [], -2)

    def test_small_t_slope_matches_tau_bound(self):
        rng = random.Random(11)
        for _ in range(50):
            coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(0, 4))]
            g = rng.randint(0, 3)
            slope = pl_initial_slope(upsilon_lower_bound(pl_zero(), coeffs, g))
            assert slope == Fraction(l1_norm(coeffs) + self_intersection(coeffs), 2) - g
            assert tau_upper_bound(0, coeffs, g) == -slope

    def test_crossing_change(self):
        upsilon_plus = torus_upsilon(2, 3)
        lower, upper = crossing_change_bounds(upsilon_plus)
        assert lower == upsilon_plus
        assert pl_leq(lower, upper)
        gap = pl_sub(upper, lower)
        for t in t_grid(6):
            assert gap(t) == 1 - abs(t - 1)

    def test_genus_band(self):
        lower, upper = genus_bounds(TREFOIL, 1)
        assert lower(1) == -2
        assert upper(1) == 0
        assert pl_leq(lower, upper)
        assert tau_interval(1, 2) == (-1, 3)


class TestTorusKnots:
    def test_adjacent_breakpoints(self):
        f = torus_upsilon_adjacent(3)
        assert f == pl_from_points(
            [(0, 0), (Fraction(2, 3), -2), (Fraction(4, 3), -2), (2, 0)]
        )

    def test_recursion(self):
        assert torus_upsilon(2, 3) == TREFOIL
        assert torus_upsilon(1, 7) == pl_zero()
        assert torus_upsilon(5, 3) == torus_upsilon(3, 5)
        assert torus_upsilon(3, 5) == pl_add(torus_upsilon(2, 3), torus_upsilon(3, 4))
        assert torus_upsilon(2, 5) == pl_from_points([(0, 0), (1, -2), (2, 0)])

    @pytest.mark.parametrize("p,q", [(2, 4), (0, 3), (6, 9)])
    def test_not_a_knot(self, p, q):
        with pytest.raises(DomainError):
            torus_upsilon(p, q)

    @pytest.mark.parametrize("a,b", [(2, 5), (3, 5), (3, 7)])
    def test_cobordism_bound_is_sharp(self, a, b):
        assert is_sharp(a, b)
        assert torus_cobordism_bound(a, b) == torus_upsilon(a, b)
