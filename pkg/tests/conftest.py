import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"

_acceptance: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion for the summary lines."""
    holder = {}

    def start(number: int, title: str):
        holder["number"], holder["title"] = number, title
        return holder

    yield start
    if "number" in holder:
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
        note = holder.get("note", "")
        _acceptance[holder["number"]] = (not failed, f"{holder['title']}{(' - ' + note) if note else ''}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        ok, text = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
