from fractions import Fraction

import pytest

from lsplacto.rootsystem import build_root_system

# type A rank 2 in fundamental-weight coordinates
EPS1 = (1, 0)
EPS2 = (-1, 1)
EPS3 = (0, -1)
ALPHA1 = (2, -1)
ALPHA2 = (-1, 2)


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A", 3)


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B", 2)


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C", 2)


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G", 2)


def frac_vec(coords):
    return tuple(Fraction(c) for c in coords)
