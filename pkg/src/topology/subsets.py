"""Nonempty point subsets for quantified checks: exhaustive when small, seeded sample otherwise."""

from __future__ import annotations

import itertools
import logging
from typing import FrozenSet, List

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_LIMIT = 12
DEFAULT_SAMPLE_COUNT = 1000
SMALL_SUBSET_SIZE = 3


def point_subsets(
    count: int,
    seed: int = 0,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
) -> List[FrozenSet[int]]:
    """Every nonempty subset of range(count), or for large spaces all subsets up to
    three points plus ``sample_count`` draws from a generator seeded with ``seed``.

    The order is deterministic for a given seed.
    """
    points = range(count)
    if count <= exhaustive_limit:
        return [frozenset(combo) for size in range(1, count + 1) for combo in itertools.combinations(points, size)]

    chosen = [
        frozenset(combo)
        for size in range(1, SMALL_SUBSET_SIZE + 1)
        for combo in itertools.combinations(points, size)
    ]
    seen = set(chosen)
    rng = np.random.default_rng(seed)
    masks = rng.integers(0, 2, size=(sample_count, count), dtype=np.int8)
    for row in masks:
        subset = frozenset(int(index) for index in np.flatnonzero(row))
        if subset and subset not in seen:
            seen.add(subset)
            chosen.append(subset)
    logger.debug("Sampled %s subsets of %s points with seed %s", len(chosen), count, seed)
    return chosen
