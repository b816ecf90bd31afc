import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import SPIDER  # noqa: E402

from forestgray import analyze, init_table, load_forest  # noqa: E402


@pytest.fixture
def spider():
    return load_forest(SPIDER)


@pytest.fixture
def spider_tables(spider):
    a = analyze(spider)
    return spider, a, init_table(spider, a)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for the acceptance summary, then assert it."""

    def record(number, name, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE, key=lambda x: x[0]):
            terminalreporter.write_line(line)
