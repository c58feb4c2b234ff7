import re
from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# criterion number -> outcomes of the tests named test_criterion_<n>_*
_CRITERIA: dict[int, list[str]] = defaultdict(list)


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the n = 6 oracle checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: needs --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)_", report.nodeid)
    if m is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        _CRITERIA[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        outcomes = _CRITERIA[n]
        ran = [o for o in outcomes if o != "skipped"]
        if "failed" in outcomes:
            verdict = "FAIL"
        else:
            verdict = "PASS" if ran else "SKIP"
        terminalreporter.write_line(
            f"criterion {n:2d}: {verdict}  ({len(ran)} run, {len(outcomes) - len(ran)} skipped)"
        )
