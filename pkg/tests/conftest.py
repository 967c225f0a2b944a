"""Collects the acceptance-criterion tests and prints one line for each."""

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, label): acceptance criterion checked by a test")


def pytest_runtest_logreport(report):
    marker = _criteria.get(report.nodeid)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        marker["outcome"] = report.outcome
        marker["seconds"] = marker.get("seconds", 0.0) + report.duration
    elif report.when == "setup":
        marker.setdefault("outcome", "passed")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, label = mark.args
            _criteria[item.nodeid] = {"number": number, "label": label}


def pytest_terminal_summary(terminalreporter):
    ran = [c for c in _criteria.values() if "outcome" in c]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ran, key=lambda c: c["number"]):
        status = "PASS" if c["outcome"] == "passed" else "FAIL"
        terminalreporter.write_line(
            f"criterion {c['number']:>2} {status}  {c['label']} "
            f"({c.get('seconds', 0.0):.1f}s)")
