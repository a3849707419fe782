"""Shared test plumbing: the acceptance-criteria report shown after the run."""

from __future__ import annotations

_ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    """Log one acceptance criterion outcome and assert it."""
    _ACCEPTANCE_RESULTS.append((name, ok, detail))
    assert ok, f"acceptance {name} FAILED: {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        suffix = f" — {detail}" if detail else ""
        terminalreporter.write_line(f"{status}  criterion {name}{suffix}")
