"""Configuration and fixtures for benchmarks."""

import random
from typing import Final

import pytest

from radohorn import RationalVector, VectorFamily

# Largest family the brute-force oracle enumerates under the default budget
ORACLE_FAMILY_SIZE: Final[int] = 9
SEED: Final[int] = 20240521


def _random_family(size: int, dimension: int, spread: int, seed: int) -> VectorFamily:
    rng = random.Random(seed)
    vectors: list[RationalVector] = []
    while len(vectors) < size:
        coords = [rng.randint(-spread, spread) for _ in range(dimension)]
        if any(coords):
            vectors.append(RationalVector.of(*coords))
    return VectorFamily.from_vectors(vectors)


@pytest.fixture(scope="session")
def wide_rational_rows() -> list[RationalVector]:
    """Twelve rows in Q^12 with p/q entries; numerators and denominators grow under elimination."""
    rng = random.Random(SEED)
    return [
        RationalVector.of(*(f"{rng.randint(-50, 50)}/{rng.randint(1, 30)}" for _ in range(12)))
        for _ in range(12)
    ]


@pytest.fixture(scope="session")
def dense_plane_family() -> VectorFamily:
    """Many vectors in a low dimension: high ratios and several stages."""
    return _random_family(ORACLE_FAMILY_SIZE, 3, 1, SEED)


@pytest.fixture(scope="session")
def large_family() -> VectorFamily:
    """Beyond brute force: 24 vectors in Q^4."""
    return _random_family(24, 4, 1, SEED + 1)
