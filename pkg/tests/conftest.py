import time

import pytest

_RESULTS: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    t0 = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - t0))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    elapsed = dict(item.user_properties).get("elapsed", 0.0)
    status = "PASS" if report.passed else "FAIL"
    # a criterion split over several tests fails if any part fails
    prev = _RESULTS.get(number)
    if prev is not None:
        status = "FAIL" if "FAIL" in (prev[0], status) else "PASS"
        elapsed += prev[2]
    _RESULTS[number] = (status, title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, elapsed = _RESULTS[number]
        terminalreporter.write_line(f"{status}  criterion {number:>2}  {title}  ({elapsed:.2f}s)")
