import pytest

# filled by the acceptance suite, printed once at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion(3, "description"): <assertions>``.
    """
    from contextlib import contextmanager

    @contextmanager
    def record(number, description):
        try:
            yield
        except BaseException:
            line = f"criterion {number}: FAIL  {description}"
            ACCEPTANCE_LINES.append(line)
            print(line)
            raise
        line = f"criterion {number}: PASS  {description}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record
