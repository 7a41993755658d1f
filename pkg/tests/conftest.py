import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from equiangular import families  # noqa: E402


@pytest.fixture
def tetra():
    return families.tetrahedron()


@pytest.fixture
def cube():
    return families.cube()


@pytest.fixture
def triprism():
    return families.generate_prism(3)


@pytest.fixture
def pentaprism():
    return families.generate_prism(5)


# acceptance verdicts, filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
