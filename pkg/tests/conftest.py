"""Shared test helpers: a registry so acceptance criteria print one
pass/fail line each in the terminal summary."""

ACCEPTANCE_RESULTS: list[str] = []


def record_criterion(cid: int, ok: bool, detail: str) -> None:
    line = f"[criterion {cid:02d}] {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_RESULTS.append(line)
    print(line, flush=True)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
