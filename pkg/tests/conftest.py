"""Shared fixtures for the knotfloer test suite."""

import random
from typing import Callable, List, Tuple

import pytest

from knotfloer.complexes import (
    ChainComplexUV,
    figure_eight,
    make_complex,
    serialize,
    staircase_torus_knot,
    trefoil,
    unknot,
    validate,
)
from knotfloer.utils.logging import logger


@pytest.fixture(autouse=True)
def quiet_debug():
    """Tests never inherit debug output from a previous test."""
    logger.set_debug(False)
    yield
    logger.set_debug(False)


@pytest.fixture
def trefoil_complex() -> ChainComplexUV:
    return trefoil()


@pytest.fixture
def figure_eight_complex() -> ChainComplexUV:
    return figure_eight()


@pytest.fixture
def unknot_complex() -> ChainComplexUV:
    return unknot()


@pytest.fixture
def t34_complex() -> ChainComplexUV:
    return staircase_torus_knot(3, 4)


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.kfc"
    path.write_text(serialize(trefoil()), encoding="utf-8")
    return path


def build_random_complex(rng: random.Random, max_generators: int = 6) -> ChainComplexUV:
    """A random valid complex: random gradings, then edges added while d^2 stays 0.

    gr_w and gr_z share parity so Alexander gradings are integers; an edge
    src -> U^a V^b dst exists only when both exponents come out nonnegative.
    """
    count = rng.randint(1, max_generators)
    generators: List[Tuple[str, int, int]] = []
    for index in range(count):
        gr_w = rng.randint(-4, 2)
        generators.append((f"g{index}", gr_w, gr_w + 2 * rng.randint(-2, 2)))

    candidates = []
    for src, src_w, src_z in generators:
        for dst, dst_w, dst_z in generators:
            twice_a = dst_w - src_w + 1
            twice_b = dst_z - src_z + 1
            if twice_a >= 0 and twice_b >= 0 and twice_a % 2 == 0 and twice_b % 2 == 0:
                candidates.append((src, dst, twice_a // 2, twice_b // 2))
    rng.shuffle(candidates)

    edges: List[Tuple[str, str, int, int]] = []
    for edge in candidates:
        if rng.random() < 0.7 and not validate(make_complex(generators, edges + [edge])):
            edges.append(edge)
    return make_complex(generators, edges)


@pytest.fixture
def random_complex() -> Callable[[random.Random], ChainComplexUV]:
    return build_random_complex
