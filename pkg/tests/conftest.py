import os
import time

from hypothesis import HealthCheck, settings

settings.register_profile(
    "g12",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "g12"))

SUITE_LIMIT = 600.0


def pytest_sessionstart(session):
    session.config.g12_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - config.g12_start
    status = "PASS" if elapsed < SUITE_LIMIT else "FAIL"
    terminalreporter.write_line(
        f"[{status}] total runtime {elapsed:.1f} s (limit {SUITE_LIMIT:g} s)")


def pytest_sessionfinish(session, exitstatus):
    if time.perf_counter() - session.config.g12_start >= SUITE_LIMIT and exitstatus == 0:
        session.exitstatus = 1
