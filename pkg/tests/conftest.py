import pytest

_VERDICTS: list[str] = []


@pytest.fixture
def verdict(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion.

    Call ``verdict(number, summary)`` before the assertions; the line is
    printed immediately (visible with ``-s``) and repeated in the terminal
    summary with the outcome of the test.
    """
    state = {}

    def record(number: int, summary: str):
        state["line"] = (number, summary)

    yield record
    if "line" in state:
        number, summary = state["line"]
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {summary}"
        print(line)
        _VERDICTS.append((number, line))


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_VERDICTS):
            terminalreporter.write_line(line)
