"""Shared fixtures: the golden squares instance and the random corpus.

The golden instance is the worked three-point example used throughout the
docs: points {0, 1, 4} under d(x, y) = (x - y)^2, the complete graph with
loops, the family bar0={0}, bar1={0,1}, bar4={0,4}, and the map sending
bar0, bar1 to bar0 and bar4 to bar1.

The corpus is 500 deterministic random exact instances with 2..6 points and
power-set families, shared session-wide because several property suites
sweep the same instances.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from semifix import (SetMap, random_instance, space_from_squared_difference,
                     validate_family, validate_graph)

ROOT = Path(__file__).resolve().parent.parent

GOLDEN_PATH = ROOT / "instances" / "squares_k3.json"
CYCLE_PATH = ROOT / "instances" / "squares_k3_cycle.json"

CORPUS_DENSITIES = (0.0, 0.25, 0.5, 0.75, 1.0)


@pytest.fixture(scope="session")
def golden_path() -> Path:
    return GOLDEN_PATH


@pytest.fixture(scope="session")
def cycle_path() -> Path:
    return CYCLE_PATH


@pytest.fixture(scope="session")
def squares_space():
    return space_from_squared_difference((0, 1, 4))


@pytest.fixture(scope="session")
def squares_graph(squares_space):
    # vertex indices: 0 -> point 0, 1 -> point 1, 2 -> point 4
    edges = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]
    return validate_graph(squares_space.size, edges)


@pytest.fixture(scope="session")
def squares_family(squares_space):
    return validate_family(squares_space,
                           {"bar0": [0], "bar1": [0, 1], "bar4": [0, 4]})


@pytest.fixture(scope="session")
def squares_map(squares_family):
    return SetMap.from_names(squares_family,
                             {"bar0": "bar0", "bar1": "bar0", "bar4": "bar1"})


@pytest.fixture(scope="session")
def cycle_map(squares_family):
    return SetMap.from_names(squares_family,
                             {"bar0": "bar1", "bar1": "bar4", "bar4": "bar0"})


def corpus_instance(seed: int):
    """Deterministic corpus member: n cycles 2..6, density cycles 5 levels."""
    n = 2 + seed % 5
    density = CORPUS_DENSITIES[(seed // 5) % 5]
    return random_instance(seed, n, family_mode="powerset", edge_density=density)


@pytest.fixture(scope="session")
def corpus():
    return [corpus_instance(seed) for seed in range(1, 501)]
