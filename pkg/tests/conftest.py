import pytest

from splitapply.datasets import RATINGS, USERIDS, USERIDS_9494

PAPER_MEANS = {381: 13 / 3, 1291: 4.0, 3992: 14 / 3, 9493: 5.0, 193942: 4.0}

_criteria = []


@pytest.fixture
def paper():
    return list(USERIDS), list(RATINGS)


@pytest.fixture
def paper_9494():
    return list(USERIDS_9494), list(RATINGS)


@pytest.fixture
def paper_csv(tmp_path):
    path = tmp_path / "trips.csv"
    lines = ["userid,rating"] + [f"{u},{int(r)}" for u, r in zip(USERIDS, RATINGS)]
    path.write_text("\n".join(lines) + "\n")
    return path


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        text = marker.args[1]
        callspec = getattr(item, "callspec", None)
        if callspec is not None:
            text = f"{text} [{callspec.id}]"
        _criteria.append((marker.args[0], text, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {text}")
