"""Tests for the identity suites."""

import random

import pytest

from knotfloer.constants import VERIFY_SUITES
from knotfloer.core import SuiteResult, create_verifier, knot_fixtures, random_piece_sequence
from knotfloer.cobordism import PieceKind, next_state
from knotfloer.complexes import validate
from knotfloer.utils.errors import DomainError


@pytest.fixture(scope="module")
def verifier():
    return create_verifier(seed=1, trials=20)


@pytest.mark.parametrize("name", VERIFY_SUITES)
def test_suite_passes(verifier, name):
    result = verifier.run(name)
    assert result.failures == []
    assert result.checks > 0
    assert result.report_line() == f"{name}\tPASS\t{result.checks}/{result.checks}"


def test_unknown_suite(verifier):
    with pytest.raises(DomainError):
        verifier.run("everything")


def test_report_line_counts_failures():
    result = SuiteResult("demo")
    result.check(True, "fine")
    result.check(False, "broken")
    assert not result.passed
    assert result.report_line() == "demo\tFAIL\t1/2"


def test_fixtures_are_valid():
    for C in knot_fixtures().values():
        assert validate(C) == []


def test_random_sequences_are_reproducible_and_composable():
    first = random_piece_sequence(random.Random("x"), 10)
    second = random_piece_sequence(random.Random("x"), 10)
    assert first == second
    state, pieces = first
    for piece in pieces:
        assert state[piece.label] >= 1 or piece.kind is PieceKind.HANDLE_0
        state = next_state(piece, state)
