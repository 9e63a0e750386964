import shutil

import pytest

from ictgrowth import demo_bundle

_ACCEPTANCE = []


@pytest.fixture
def demo_path():
    return demo_bundle()


@pytest.fixture
def demo_copy(tmp_path):
    """Writable copy of the demo bundle."""
    target = tmp_path / "bundle"
    shutil.copytree(demo_bundle(), target)
    return target


@pytest.fixture
def criterion():
    """Record an acceptance verdict; all verdicts are listed in the terminal summary."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] AC{number} {title}" + (f": {detail}" if detail else "")
        _ACCEPTANCE.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
