import random

import pytest

DEFAULT_SEED = 20240611


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config._criteria = {}


def pytest_runtest_logreport(report):
    item_marks = getattr(report, "criterion", None)
    if item_marks is None:
        return
    results = report.config_criteria
    ok = report.passed
    if report.when == "call" or not ok:
        results.setdefault(item_marks, []).append(ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = mark.args[0]
        report.config_criteria = item.config._criteria


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        status = "PASS" if all(results[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {status} ({len(results[num])} checks)")
