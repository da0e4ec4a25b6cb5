from __future__ import annotations

import pytest

from ggscodes.curve import curve_from_params

_criteria: dict[int, list[bool]] = {}


def pytest_addoption(parser):
    parser.addoption("--heavy", action="store_true", default=False, help="run long checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy"):
        return
    skip = pytest.mark.skip(reason="needs --heavy")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria.setdefault(n, []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok = all(_criteria[n])
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}")


@pytest.fixture(scope="session")
def gk():
    return curve_from_params(2, 1, 3)


@pytest.fixture(scope="session")
def ggs25():
    return curve_from_params(2, 1, 5)


@pytest.fixture(scope="session")
def ggs33():
    return curve_from_params(3, 1, 3)
