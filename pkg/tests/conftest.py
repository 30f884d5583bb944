from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)

import pytest

_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    entry = _criteria.setdefault(mark.args[0], [True, 0.0, mark.kwargs.get("title", "")])
    entry[0] = entry[0] and rep.passed
    entry[1] += rep.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance")
    for n in sorted(_criteria):
        ok, secs, title = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {title}")
