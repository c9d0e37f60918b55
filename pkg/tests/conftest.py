import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    results = item.config.stash.setdefault(_KEY, {})
    n, title = mark.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = results.get(n, (title, True))
        results[n] = (title, prev[1] and not failed)


_KEY = pytest.StashKey()


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, ok = results[n]
        terminalreporter.write_line(f"AC{n} {'PASS' if ok else 'FAIL'}  {title}")
