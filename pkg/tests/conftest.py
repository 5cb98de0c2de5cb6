from fractions import Fraction

import pytest

from cherednik_supports.charged_fock import FockParam
from cherednik_supports.crystal import e_op, f_op


def param(kappa, *charges, h=None):
    return FockParam(Fraction(kappa), tuple(Fraction(s) for s in charges), h)


@pytest.fixture
def chamber1():
    return param("-1/2", 0, -4)


@pytest.fixture
def clear_crystal_caches():
    e_op.cache_clear()
    f_op.cache_clear()
    yield
    e_op.cache_clear()
    f_op.cache_clear()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
