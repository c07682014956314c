from itertools import combinations_with_replacement

import pytest
from hypothesis import settings

from eqcolor import make_instance

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


def small_grid():
    """k in [1, 4], sizes in [1, 10], non-decreasing: 1000 instances."""
    return [
        make_instance(sizes)
        for k in range(1, 5)
        for sizes in combinations_with_replacement(range(1, 11), k)
    ]


@pytest.fixture(scope="session")
def grid():
    return small_grid()


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
