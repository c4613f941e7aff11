"""Shared acceptance reporting: one terminal line per top-level criterion."""

ACCEPTANCE_RESULTS = []


def record_acceptance(name, failures):
    """Register a criterion outcome, echo it, and fail the test on any defect."""
    passed = not failures
    ACCEPTANCE_RESULTS.append((name, passed))
    print(f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'}")
    assert passed, f"{name}:\n" + "\n".join(failures)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'}")
