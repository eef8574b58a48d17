import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ginv.catalog import build  # noqa: E402


@functools.lru_cache(maxsize=None)
def group(spec):
    return build(spec)


@pytest.fixture
def G():
    return group


SMALL = ["C1", "C2", "C3", "C4", "C6", "Ab[2,2]", "Ab[2,4,3]", "S3", "S4", "D4", "D5",
         "Q8", "A4", "A5", "F21", "H27"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
