"""Shared helpers: seeded random graph/spec generators and fixtures."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from rtdensity import WeightedGraph

REPO_ROOT = Path(__file__).resolve().parents[1]
SCHEMA_DIR = REPO_ROOT / "schemas"

EDGE_PALETTE = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]


def random_vertex_weights(rng: random.Random, n: int, denom: int = 24) -> list[Fraction]:
    """A positive rational composition of 1 into n parts (multiples of 1/denom)."""
    assert denom >= n
    cuts = sorted(rng.sample(range(1, denom), n - 1)) if n > 1 else []
    parts = []
    prev = 0
    for c in cuts + [denom]:
        parts.append(Fraction(c - prev, denom))
        prev = c
    return parts


def random_graph(
    rng: random.Random,
    n: int,
    denom: int = 24,
    palette: list[Fraction] = EDGE_PALETTE,
    zero_edge: bool = False,
) -> WeightedGraph:
    weights = random_vertex_weights(rng, n, denom)
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            edges[(u, v)] = rng.choice(palette)
    if zero_edge:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges[rng.choice(pairs)] = Fraction(0)
    return WeightedGraph.build(weights, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
