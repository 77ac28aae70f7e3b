"""Shared test configuration.

The acceptance tests must each surface one unconditional PASS/FAIL line;
the logreport hook below prints it regardless of capture settings, so the
summary survives plain ``pytest`` runs as well as ``pytest -v``.
"""

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\n[acceptance] {verdict} {name} ({report.duration:.1f}s)", flush=True)
