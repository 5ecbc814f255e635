import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed at the end."""
    entry = {"name": None, "detail": "", "passed": False}

    def register(name):
        entry["name"] = name
        return entry

    yield register
    if entry["name"] is not None:
        rep = getattr(request.node, "rep_call", None)
        entry["passed"] = bool(rep and rep.passed)
        ACCEPTANCE_RESULTS.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for entry in ACCEPTANCE_RESULTS:
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['name']}  {entry['detail']}".rstrip())
