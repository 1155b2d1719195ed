import sys
from pathlib import Path

import pytest

from wsi.rootsys import make_root_system

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def A1():
    return make_root_system("A1")


@pytest.fixture(scope="session")
def A2():
    return make_root_system("A2")


@pytest.fixture(scope="session")
def B2():
    return make_root_system("B2")


@pytest.fixture(scope="session")
def A3():
    return make_root_system("A3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
