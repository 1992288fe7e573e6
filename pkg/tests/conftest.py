"""Shared rings for the suite.

Algebras cache their census, cyclic table, and brute-force results, so
the hot rings are built once per session and handed around.
"""

import pytest

from cyclicideals import build_algebra, parse_presentation

PAIR_N3 = "field 2 / vars x y / rel x^3 / rel y^3 / rel x*y"
PAIR_N4 = "field 2 / vars x y / rel x^4 / rel y^4 / rel x*y"
TRIPLE = ("field 2 / vars x1 x2 x3 / rel x1^3 / rel x2^3 / rel x3^3"
          " / rel x1*x2 / rel x1*x3 / rel x2*x3")
CHAIN4 = "field 2 / vars x / rel x^4"
CHAIN5 = "field 2 / vars x / rel x^5"
POWER_SERIES = "field 2 / vars x / truncate 6"
SQUARE_ZERO_N2 = "field 2 / vars x y / rel x^2 / rel y^2 / rel x*y"
SQUARE_ZERO_N3 = ("field 2 / vars x y z / rel x^2 / rel y^2 / rel z^2"
                  " / rel x*y / rel x*z / rel y*z")
AXIS_SOCLE = "field 2 / vars x y / rel x*y / rel y^2 / truncate 6"
TWO_AXES = "field 2 / vars x y / rel x*y / truncate 6"
GF3_UNDECIDED = "field 3 / vars x y / rel x^2 / rel y^2"


def build(text):
    return build_algebra(parse_presentation(text))


def build_pres(text):
    pres = parse_presentation(text)
    return pres, build_algebra(pres)


@pytest.fixture(scope="session")
def pair_n3():
    return build(PAIR_N3)


@pytest.fixture(scope="session")
def triple():
    return build(TRIPLE)


@pytest.fixture(scope="session")
def chain4():
    return build(CHAIN4)
