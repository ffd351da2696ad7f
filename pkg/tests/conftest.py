import pytest
from hypothesis import strategies as st

from realgrass import GrassmannShape


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")
    config._acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        number, text = marker.args
        status = "PASS" if report.passed else "FAIL"
        item.config._acceptance_lines.append((int(number), f"AC{int(number):02d} {status}  {text}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = sorted(config._acceptance_lines)
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in lines:
            terminalreporter.write_line(line)


@st.composite
def shapes(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    return GrassmannShape(k, n)


def all_shapes(max_n):
    return [GrassmannShape(k, n) for n in range(2, max_n + 1) for k in range(1, n)]
