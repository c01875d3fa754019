from collections import defaultdict

import pytest

# criterion number -> list of (test id, passed)
_CRITERIA = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by this test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    _CRITERIA[marker.args[0]].append((item.nodeid, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        failed = [nid for nid, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {n:2d}: {status}  ({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"    failed: {nid}")
