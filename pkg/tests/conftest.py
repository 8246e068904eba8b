import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SESSION_START = pytest.StashKey[float]()
_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")
    config.stash[SESSION_START] = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance last so criterion 7 can time the rest of the session
    def key(item):
        mark = item.get_closest_marker("criterion")
        return (1, mark.args[0]) if mark else (0, 0)
    items.sort(key=key)


def pytest_runtest_logreport(report):
    if report.when != "call" and report.outcome != "failed":
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    n = props["criterion"]
    if n not in _results or report.outcome == "failed":
        _results[n] = (props["title"], report.outcome, props.get("detail", ""))


@pytest.fixture
def criterion(request):
    mark = request.node.get_closest_marker("criterion")
    n, title = mark.args
    request.node.user_properties.append(("criterion", n))
    request.node.user_properties.append(("title", title))

    def detail(text):
        request.node.user_properties.append(("detail", text))
    return detail


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        title, outcome, detail = _results[n]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"{status} criterion {n}: {title}"
        terminalreporter.write_line(f"{line} ({detail})" if detail else line)


@pytest.fixture
def session_elapsed(request):
    start = request.config.stash[SESSION_START]
    return lambda: time.perf_counter() - start
