import pytest

from fixtures import P_FIG, Q_FIG


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False, help="run the 3x4 / 4x3 sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def P():
    return P_FIG


@pytest.fixture
def Q():
    return Q_FIG


_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    number, title = marker.args
    status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
    previous = _criteria.get(number)
    # a criterion split over several tests fails if any part fails
    if previous is None or status == "FAIL" or previous[1] == "SKIP":
        _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
