import itertools

import pytest


def brute_triangles(max_side):
    """Canonical triangles by filtering every ordered triple; independent of medtri.search."""
    out = set()
    for x, y, z in itertools.product(range(1, max_side + 1), repeat=3):
        if x + y > z and y + z > x and z + x > y:
            out.add(tuple(sorted((x, y, z))))
    return out


def scan_root(q):
    """Integer square root of q by linear scan, or None."""
    r = 0
    while r * r < q:
        r += 1
    return r if r * r == q else None


@pytest.fixture
def small_triangles():
    return brute_triangles(12)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")
    config._acceptance_lines = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    status = "PASS" if call.excinfo is None else "FAIL"
    item.config._acceptance_lines.append((number, f"criterion {number}: {status}  {title}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = sorted(getattr(config, "_acceptance_lines", []))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in lines:
            terminalreporter.write_line(line)
