import pytest

RESULTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")
    config.stash[RESULTS] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    n, title = marker.args
    if report.passed:
        detail = dict(item.user_properties).get("detail", "")
    else:
        detail = call.excinfo.exconly().splitlines()[0][:160] if call.excinfo else ""
    item.config.stash[RESULTS][n] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[RESULTS]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        status, title, detail = results[n]
        suffix = f": {detail}" if detail else ""
        terminalreporter.write_line(f"{status}  [{n}] {title}{suffix}")
