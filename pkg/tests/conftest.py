"""Collects one verdict per acceptance criterion and prints them after the run."""

import pytest

_VERDICTS: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number = marker.args[0]
    title = marker.kwargs.get("title", item.name)
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _VERDICTS[number] = ("FAIL", title)
    elif report.when == "call":
        _VERDICTS.setdefault(number, ("PASS", title))


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        verdict, title = _VERDICTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
    passed = sum(v == "PASS" for v, _ in _VERDICTS.values())
    terminalreporter.write_line(f"{passed}/{len(_VERDICTS)} criteria passed")
