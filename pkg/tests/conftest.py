import random

import pytest

from twosided.bench import random_interval_set
from twosided.model import IntervalSet, LayoutInstance


def make_set(spans, weights=None, pair_weights=0) -> IntervalSet:
    return IntervalSet.build(spans, weights, pair_weights)


def random_layout(rng: random.Random, n: int, m: int) -> LayoutInstance:
    """Random simple graph on n vertices with m edges, identity order."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = rng.sample(pairs, m)
    return LayoutInstance.build(range(1, n + 1), edges)


def complete_graph(n: int) -> LayoutInstance:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return LayoutInstance.build(range(1, n + 1), edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC1C7E)


__all__ = ["make_set", "random_layout", "complete_graph", "random_interval_set"]
