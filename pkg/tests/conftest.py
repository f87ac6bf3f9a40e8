from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polarkron import paperdata
from polarkron.kernel import ARIKAN, Kernel, product_kernel

# a polarizing 3x3 kernel used wherever "a polarizing T_3" is needed
T3_ROWS = ("100", "110", "101")


@pytest.fixture(scope="session")
def t2() -> Kernel:
    return ARIKAN


@pytest.fixture(scope="session")
def t3() -> Kernel:
    return Kernel.from_rows(T3_ROWS)


@pytest.fixture(scope="session")
def t5() -> Kernel:
    return paperdata.T5


@pytest.fixture(scope="session")
def t7() -> Kernel:
    return paperdata.T7


@pytest.fixture(scope="session")
def g4() -> Kernel:
    return product_kernel([ARIKAN, ARIKAN])


@pytest.fixture(scope="session")
def t10(t5) -> Kernel:
    return product_kernel([ARIKAN, t5])


@pytest.fixture(scope="session")
def t14(t7) -> Kernel:
    return product_kernel([ARIKAN, t7])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
