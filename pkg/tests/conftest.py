from __future__ import annotations

# Acceptance verdicts, filled by test_acceptance.py and echoed after the run.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
NOTES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")
    for note in NOTES:
        terminalreporter.write_line(f"note: {note}")
