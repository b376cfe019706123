import pytest

_results: dict[tuple[int, str], bool] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    tag = getattr(getattr(item, "function", None), "acceptance", None)
    if tag is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[tag] = _results.get(tag, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_results.items()):
        terminalreporter.write_line(f"[{number:02d}] {'PASS' if ok else 'FAIL'}  {title}")
