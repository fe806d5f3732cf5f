import random

import pytest


def pytest_addoption(parser):
    parser.addoption("--seed", action="store", type=int, default=1729,
                     help="Seed of the randomized property tests.")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
