import pytest

from psl2ogs import gf, seq

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13]
DESK_Q = SMALL_Q + [16, 17, 19, 23, 25, 27, 29, 31, 32]


@pytest.fixture
def F29():
    return gf.field_for_order(29)


@pytest.fixture
def F4():
    return gf.field_for_order(4)


@pytest.fixture
def T29(F29):
    return seq.tables_for(F29)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
