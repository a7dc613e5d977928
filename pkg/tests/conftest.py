import math

import pytest

from schwarzeig import ConformalMap


def series_j(n, x, terms=60):
    """Plain ascending series with fsum; an oracle independent of the package code."""
    return math.fsum((-1) ** k * (x / 2) ** (2 * k + n) / (math.factorial(k) * math.factorial(k + n))
                     for k in range(terms))


@pytest.fixture(scope="session")
def j0():
    lo, hi = 2.0, 3.0
    while hi - lo > 1e-15:
        mid = 0.5 * (lo + hi)
        if series_j(0, mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.fixture
def identity():
    return ConformalMap([0, 1])


@pytest.fixture
def quadratic():
    return ConformalMap([0, 1, 0.3])


@pytest.fixture
def square():
    return ConformalMap([0, 0, 1])


_criterion_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        _criterion_lines.extend(v for k, v in report.user_properties if k == "criterion")


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
