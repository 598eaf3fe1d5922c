import random

import pytest

DEFAULT_SEED = 20240601


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=DEFAULT_SEED,
                     help="Seed for randomized checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long brute-force convergence runs (deselect with -m 'not slow')")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)
