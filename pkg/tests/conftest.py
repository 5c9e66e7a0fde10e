import pytest

_acceptance = []
_setup_time = {}


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run long reproduction jobs (bb_delta up to l = 90)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="long job; pass --extended to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "setup":
        _setup_time[name] = report.duration
        if report.skipped:
            _acceptance.append((name, "SKIP", "0.0s"))
        elif report.failed:
            _acceptance.append((name, "FAIL", f"{report.duration:.1f}s"))
    elif report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        total = report.duration + _setup_time.get(name, 0.0)
        _acceptance.append((name, status, f"{total:.1f}s"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, dur in _acceptance:
        terminalreporter.write_line(f"{status:4}  {name}  ({dur})")
