import pytest

from gradedpi import cyclic, direct_product, integers

from helpers import algebra

Z2, Z3 = cyclic(2), cyclic(3)
K4 = direct_product(cyclic(2), cyclic(2))


def desk_algebras():
    """Small gradings used across the property tests."""
    return {
        "UT11/Z2": algebra(2, (0, 1), (1, 1)),
        "M2/Z2": algebra(2, (0, 1)),
        "M3/Z3": algebra(3, (0, 1, 2)),
        "UT21/Z3": algebra(3, (0, 1, 2), (2, 1)),
        "UT3/Z3": algebra(3, (0, 1, 2), (1, 1, 1)),
        "UT12/Z": algebra(None, (0, 1, 3), (1, 2), group=integers()),
        "UT22/K4": algebra(None, ((0, 0), (1, 0), (0, 1), (1, 1)), (2, 2), group=K4),
    }


DESK = desk_algebras()


@pytest.fixture(params=sorted(DESK))
def desk(request):
    return DESK[request.param]


@pytest.fixture
def ut11():
    return DESK["UT11/Z2"]


@pytest.fixture
def m2():
    return DESK["M2/Z2"]


@pytest.fixture
def m3():
    return DESK["M3/Z3"]


@pytest.fixture
def ut3():
    return DESK["UT3/Z3"]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
