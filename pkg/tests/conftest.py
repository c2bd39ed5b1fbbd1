import pytest
from hypothesis import HealthCheck, settings

from d5roof.chessboard import replay
from d5roof.cli import resolve_script_path
from d5roof.script import load_script

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def flop_script():
    return load_script(resolve_script_path("d5_flop.script"))


@pytest.fixture(scope="session")
def cayley_script():
    return load_script(resolve_script_path("d5_cayley.script"))


@pytest.fixture(scope="session")
def flop_report(flop_script):
    return replay(flop_script)


@pytest.fixture(scope="session")
def cayley_report(cayley_script):
    return replay(cayley_script)


CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    n, title = marker
    ok = report.passed and not hasattr(report, "wasxfail")
    entry = CRITERIA.setdefault(n, {"title": title, "ok": True, "notes": []})
    if not ok:
        entry["ok"] = False
        if hasattr(report, "wasxfail"):
            entry["notes"].append(report.wasxfail)
        else:
            entry["notes"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        e = CRITERIA[n]
        line = f"criterion {n} ({e['title']}): {'PASS' if e['ok'] else 'FAIL'}"
        if e["notes"]:
            line += " [" + "; ".join(e["notes"]) + "]"
        terminalreporter.write_line(line)
