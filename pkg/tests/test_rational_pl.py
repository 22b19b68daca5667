"""Tests for exact rationals and PL functions."""

import random
from fractions import Fraction

import pytest

from knotfloer.algebra import (
    Line,
    PLFunction,
    pl_add,
    pl_eval,
    pl_from_points,
    pl_initial_slope,
    pl_leq,
    pl_line,
    pl_max,
    pl_min,
    pl_neg,
    pl_parse,
    pl_reflect,
    pl_sample,
    pl_scale,
    pl_serialize,
    pl_sub,
    pl_upper_envelope,
    pl_zero,
    to_rational,
)
from knotfloer.invariants import t_grid
from knotfloer.utils.errors import DomainError, KfcSyntaxError

TREFOIL_UPSILON = pl_from_points([(0, 0), (1, -1), (2, 0)])


class TestPLFunction:
    def test_evaluation_interpolates_exactly(self):
        assert TREFOIL_UPSILON(Fraction(1, 2)) == Fraction(-1, 2)
        assert TREFOIL_UPSILON("3/2") == Fraction(-1, 2)
        assert pl_eval(TREFOIL_UPSILON, 2) == 0

    def test_collinear_breakpoints_are_dropped(self):
        f = pl_from_points([(0, 0), (1, 1), (2, 2)])
        assert f.breakpoints == ((0, 0), (2, 2))
        assert f == pl_line(Line(1, 0))

    def test_domain_is_checked(self):
        with pytest.raises(DomainError):
            PLFunction(((0, 0), (1, 0)))
        with pytest.raises(DomainError):
            pl_from_points([(0, 0), (1, 0), (1, 1), (2, 0)])
        with pytest.raises(DomainError):
            TREFOIL_UPSILON(Fraction(5, 2))

    def test_floats_are_refused(self):
        with pytest.raises(DomainError):
            to_rational(0.5)
        with pytest.raises(DomainError):
            TREFOIL_UPSILON(0.5)

    def test_str(self):
        assert str(TREFOIL_UPSILON) == "(0, 0), (1, -1), (2, 0)"


class TestArithmetic:
    def test_add_sub_neg_scale(self):
        doubled = pl_add(TREFOIL_UPSILON, TREFOIL_UPSILON)
        assert doubled == pl_scale(TREFOIL_UPSILON, 2)
        assert pl_sub(doubled, TREFOIL_UPSILON) == TREFOIL_UPSILON
        assert pl_add(TREFOIL_UPSILON, pl_neg(TREFOIL_UPSILON)) == pl_zero()

    def test_max_inserts_crossing(self):
        falling = pl_line(Line(-1, 0))
        rising = pl_line(Line(1, -2))
        assert pl_max(falling, rising) == pl_from_points([(0, 0), (1, -1), (2, 0)])
        assert pl_min(falling, rising) == pl_from_points([(0, -2), (1, -1), (2, -2)])

    def test_reflect(self):
        assert pl_reflect(TREFOIL_UPSILON) == TREFOIL_UPSILON
        f = pl_from_points([(0, 0), (Fraction(1, 2), 1), (2, 0)])
        assert pl_reflect(f)(Fraction(3, 2)) == 1

    def test_leq(self):
        assert pl_leq(TREFOIL_UPSILON, pl_zero())
        assert not pl_leq(pl_zero(), TREFOIL_UPSILON)

    def test_initial_slope(self):
        assert pl_initial_slope(TREFOIL_UPSILON) == -1


class TestUpperEnvelope:
    def test_empty_envelope_is_an_error(self):
        with pytest.raises(DomainError):
            pl_upper_envelope([])

    def test_parallel_lines_keep_the_highest(self):
        f = pl_upper_envelope([Line(1, 0), Line(1, 3), Line(1, -1)])
        assert f == pl_line(Line(1, 3))

    def test_matches_brute_force_maximum(self):
        rng = random.Random(7)
        grid = t_grid(12)
        for _ in range(100):
            lines = [
                Line(Fraction(rng.randint(-8, 8), rng.randint(1, 4)), rng.randint(-5, 5))
                for _ in range(rng.randint(1, 6))
            ]
            f = pl_upper_envelope(lines)
            for t in grid + f.ts:
                assert f(t) == max(line.at(t) for line in lines)


class TestSerialization:
    def test_serialize(self):
        assert pl_serialize(TREFOIL_UPSILON) == "0\t0\n1\t-1\n2\t0\n"

    def test_parse_skips_comments_and_blank_lines(self):
        text = "# Upsilon of T(2,3)\n0 0\n\n1\t-1\n2 0\n"
        assert pl_parse(text) == TREFOIL_UPSILON

    def test_parse_reports_line_numbers(self):
        with pytest.raises(KfcSyntaxError) as excinfo:
            pl_parse("0 0\n1 x\n2 0\n")
        assert excinfo.value.line_number == 2
        with pytest.raises(KfcSyntaxError):
            pl_parse("0 0\n1 -1\n")

    def test_sample(self):
        samples = pl_sample(TREFOIL_UPSILON, Fraction(1, 2))
        assert [t for t, _ in samples] == [0, Fraction(1, 2), 1, Fraction(3, 2), 2]
        assert [t for t, _ in pl_sample(TREFOIL_UPSILON, Fraction(3, 4))] == [
            0,
            Fraction(3, 4),
            Fraction(3, 2),
            2,
        ]
        with pytest.raises(DomainError):
            pl_sample(TREFOIL_UPSILON, 0)


def random_pl(rng: random.Random) -> PLFunction:
    """Random PL function on [0, 2]: rational breakpoints, values of either sign."""
    interior = {Fraction(rng.randint(1, 23), 12) for _ in range(rng.randint(0, 4))}
    ts = [Fraction(0), *sorted(interior), Fraction(2)]
    return pl_from_points(
        (t, Fraction(rng.randint(-20, 20), rng.randint(1, 6))) for t in ts
    )


class TestRandomProperties:
    @pytest.fixture(scope="class")
    def pairs(self):
        rng = random.Random(2024)
        return [(random_pl(rng), random_pl(rng)) for _ in range(200)]

    def test_add_is_pointwise(self, pairs):
        grid = t_grid(7)
        for f, g in pairs:
            total = pl_add(f, g)
            for t in grid + f.ts + g.ts:
                assert total(t) == f(t) + g(t)

    def test_reflect_is_an_involution_and_distributes(self, pairs):
        for f, g in pairs:
            assert pl_reflect(pl_reflect(f)) == f
            assert pl_reflect(pl_add(f, g)) == pl_add(pl_reflect(f), pl_reflect(g))
            for t in f.ts:
                assert pl_reflect(f)(2 - t) == f(t)

    def test_serialized_text_parses_back(self, pairs):
        for f, g in pairs:
            assert pl_parse(pl_serialize(f)) == f
            assert pl_parse(pl_serialize(pl_sub(f, g))) == pl_sub(f, g)

    def test_negative_intercepts_survive(self):
        f = pl_from_points([(0, Fraction(-7, 3)), (Fraction(5, 6), Fraction(-1, 4)), (2, -3)])
        assert pl_serialize(f) == "0\t-7/3\n5/6\t-1/4\n2\t-3\n"
        assert pl_parse(pl_serialize(f)) == f
