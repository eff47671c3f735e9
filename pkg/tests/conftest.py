import sys

import pytest

from gradedpi.catalogue import negative_catalogue, simple_catalogue
from gradedpi.scalars import FieldSpec


@pytest.fixture(scope="session")
def F12():
    return FieldSpec.cyclotomic(12)


@pytest.fixture(scope="session")
def simple(F12):
    return dict(simple_catalogue(F12))


@pytest.fixture(scope="session")
def negatives(F12):
    return dict(negative_catalogue(F12))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
