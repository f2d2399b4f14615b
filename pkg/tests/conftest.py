import sys

import pytest

from excsing.chartab import load_table
from excsing.bundled import TABLE_DATA, load_profile_data, sum_sets


@pytest.fixture(scope="session")
def bundle():
    return load_profile_data()


@pytest.fixture(scope="session")
def sums(bundle):
    return sum_sets(bundle.delta)


@pytest.fixture(scope="session")
def big_table():
    return load_table(TABLE_DATA)


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[n])
