import pytest

import acceptance_log

from shiftblocks import FiniteWordSet, block_present, normalize_forbidden, block_present_sft

V_TEXT = "babecbababecbededecb"
X_DIGITS = "1 0 5 9 2 1 3 1 0 5 9 4 7 T 6 T 8 9".split()
Y_TEXT = "DAEGBDADAEGBFHCHCGB"


@pytest.fixture
def V():
    return FiniteWordSet([V_TEXT])


@pytest.fixture
def X():
    """The 3-block presentation of V with its blocks renamed to digits (T is ten)."""
    return FiniteWordSet([X_DIGITS])


@pytest.fixture
def Y():
    return FiniteWordSet([Y_TEXT])


@pytest.fixture
def V2(V):
    return block_present(V, 2)[0]


@pytest.fixture
def golden():
    return normalize_forbidden("01", ["11"])


@pytest.fixture
def golden2(golden):
    return block_present_sft(golden, 2)


@pytest.fixture
def full2():
    return normalize_forbidden("01", [])


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(acceptance_log.RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")
