import random

import pytest
from hypothesis import strategies as st

from holoperiods.matrix import IntMatrix


def random_matrix(rng: random.Random, n: int, lo: int, hi: int) -> IntMatrix:
    return IntMatrix.of([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def int_matrices(draw, max_n=6, lo=-5, hi=5, min_n=0):
    n = draw(st.integers(min_n, max_n))
    entries = st.integers(lo, hi)
    return IntMatrix.of([[draw(entries) for _ in range(n)] for _ in range(n)])


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")
