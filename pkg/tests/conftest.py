import pathlib

import pytest

from autalg.presentation import parse_file

DATA = pathlib.Path(__file__).parent / "data"

CORPUS = sorted(DATA.glob("*.malg"))


def load(name):
    return parse_file(DATA / name)


@pytest.fixture
def p0():
    return load("p0_f2.malg")


@pytest.fixture
def p1():
    return load("p1_q.malg")


@pytest.fixture
def p2():
    return load("p2_f3.malg")


@pytest.fixture
def p2q():
    return load("p2_q.malg")


@pytest.fixture
def p2graded():
    return load("p2_graded_f3.malg")


@pytest.fixture
def pv3():
    return load("pv_f3.malg")


@pytest.fixture
def pv5():
    return load("pv_f5.malg")
