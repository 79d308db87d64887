ACCEPTANCE_RESULTS = {}


def record(number, ok, detail=""):
    """Remember the outcome of acceptance criterion ``number`` for the summary."""
    ACCEPTANCE_RESULTS[number] = (bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
