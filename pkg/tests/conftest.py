import pytest

from asmaps.graph import Graph

_criteria = {}
_SEVERITY = ["PASS", "SKIP", "FAIL"]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion gate")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or report.outcome != "passed":
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        previous = _criteria.get(number, ("PASS", text))[0]
        _criteria[number] = (max(previous, status, key=_SEVERITY.index), text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, text = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")


@pytest.fixture
def k4():
    return Graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def star_plus():
    """Hub 0 with leaves 1, 2, 3 and an extra leaf-leaf edge 1-2."""
    return Graph([(0, 1), (0, 2), (0, 3), (1, 2)])


@pytest.fixture
def star5():
    return Graph([(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def c4():
    return Graph([(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def path3():
    return Graph([(1, 2), (2, 3)])
