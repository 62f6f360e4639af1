import sympy as sp
import pytest

from qvirasoro.qscalar import QExact

Q = sp.Symbol("q")

_ACCEPTANCE_LINES = []


def to_sympy(x: QExact):
    num = sum(c * Q ** i for i, c in enumerate(x.num))
    den = sum(c * Q ** i for i, c in enumerate(x.den))
    return Q ** x.shift * num / den


def sp_qint(m):
    return (Q ** m - Q ** -m) / (Q - 1 / Q)


def sp_qangle(m):
    return Q ** m + Q ** -m


def sp_equal(x: QExact, expr) -> bool:
    return sp.simplify(to_sympy(x) - expr) == 0


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
