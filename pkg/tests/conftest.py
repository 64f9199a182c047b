"""Shared fixtures: the small reference families used throughout the suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from radohorn import VectorFamily
from tests.helpers import family_of

FIXTURES_DIR = Path(__file__).parent / "fixtures"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def fam_a() -> VectorFamily:
    """(1,0), (0,1), (1,1): fundamental profile [2, 1]."""
    return family_of((1, 0), (0, 1), (1, 1))


@pytest.fixture
def fam_b() -> VectorFamily:
    """Three collinear vectors: fundamental profile [1, 1, 1]."""
    return family_of((1, 0), (2, 0), (3, 0))


@pytest.fixture
def fam_c() -> VectorFamily:
    """e1, e2, e1+e2, e3: fundamental profile [3, 1]."""
    return family_of((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))


@pytest.fixture
def fam_d() -> VectorFamily:
    """e1, 2e1, e2, 2e2: fundamental profile [2, 2]."""
    return family_of((1, 0), (2, 0), (0, 1), (0, 2))


@pytest.fixture
def basis3() -> VectorFamily:
    return family_of((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
