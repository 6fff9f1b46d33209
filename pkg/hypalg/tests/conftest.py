"""Shared fixtures for the hypalg test suite."""

import json
import random
from pathlib import Path

import pytest

from hypalg.services.workbench import AlgebraWorkbench

TEST_SEED = 20240517


@pytest.fixture
def test_data_dir():
    """Get test data directory path."""
    return Path(__file__).parent / "test_data"


@pytest.fixture
def noncyclic_witness(test_data_dir):
    """Load the stored non-cyclic trace witness."""
    with open(test_data_dir / "noncyclic_trace_witness.json", "r") as f:
        return json.load(f)


@pytest.fixture
def rng():
    return random.Random(TEST_SEED)


@pytest.fixture
def workbench():
    return AlgebraWorkbench(seed=TEST_SEED)
