from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    """Log one acceptance verdict; printed again in the terminal summary."""
    line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
