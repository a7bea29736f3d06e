"""Collects acceptance outcomes and prints one line per criterion."""
from collections import OrderedDict

_results: "OrderedDict[str, list[bool]]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test belongs to")


def pytest_runtest_logreport(report):
    label = _label(report)
    if label is None:
        return
    if report.when == "call" or report.failed:
        _results.setdefault(label, []).append(report.passed and not report.failed)


def _label(report):
    for key, value in getattr(report, "user_properties", ()):
        if key == "criterion":
            return value
    return None


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split(".")[0])):
        verdict = "PASS" if all(_results[label]) else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")
