"""Shared pytest plumbing: the acceptance-criteria summary block."""

from __future__ import annotations

# test_acceptance.py records one line per criterion here; the terminal
# summary below re-emits them after the run, outside output capture.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
