"""Shared pytest wiring.

Collects the outcome of every test in test_acceptance.py and prints a
single PASS/FAIL line per criterion at the end of the run, so the gate
can be read without scrolling through the full log.
"""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")

_outcomes = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call":
        _outcomes[key] = report.outcome
    elif report.outcome not in ("passed",):
        # a setup or teardown error also sinks the criterion
        _outcomes[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, label in sorted(_outcomes):
        outcome = _outcomes[(number, label)]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        name = label.replace("_", " ")
        terminalreporter.write_line(f"criterion {number:02d} ({name}): {verdict}")
