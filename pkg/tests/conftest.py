import sys
import time
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus" / "synthetic"
SUITE_BUDGET_S = 60.0

sys.path.insert(0, str(Path(__file__).parent))

_criteria: list[tuple[str, str, str]] = []
_started = time.perf_counter()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((marker.args[0], report.outcome.upper(), item.name))


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _started
    session.config._textsim_elapsed = elapsed
    if elapsed > SUITE_BUDGET_S and session.testscollected > 1 and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, test in _criteria:
        terminalreporter.write_line(f"{outcome:7s} {name}  ({test})")
    elapsed = getattr(config, "_textsim_elapsed", None)
    if elapsed is not None:
        status = "PASSED" if elapsed <= SUITE_BUDGET_S else "FAILED"
        terminalreporter.write_line(
            f"{status:7s} suite runtime {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)"
        )


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def corpus():
    from textsim.evalreport import load_corpus

    return load_corpus(CORPUS)
