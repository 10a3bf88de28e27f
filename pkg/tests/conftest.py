"""Shared test plumbing.

The acceptance module records one entry per criterion here; the terminal
summary hook prints them as single PASS/FAIL lines at the end of the run
so the verdicts are visible without -s.
"""

from typing import List, Tuple

ACCEPTANCE: List[Tuple[int, str, bool, str]] = []


def record_criterion(number: int, description: str, ok: bool, detail: str = "") -> str:
    line = f"criterion-{number:02d} {'PASS' if ok else 'FAIL'}: {description}"
    if detail:
        line += f" [{detail}]"
    ACCEPTANCE.append((number, description, ok, detail))
    print(line, flush=True)
    return line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok, detail in sorted(ACCEPTANCE):
        line = f"criterion-{number:02d} {'PASS' if ok else 'FAIL'}: {description}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
