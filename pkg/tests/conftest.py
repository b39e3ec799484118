from fractions import Fraction
from pathlib import Path

import pytest

from kuwork import FiniteAlgebra, FuzzySet, SelfMap

import oracles

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def a5():
    return FiniteAlgebra(oracles.A5)


@pytest.fixture
def b5():
    return FiniteAlgebra(oracles.B5)


@pytest.fixture
def d5():
    return SelfMap(tuple(oracles.EXAMPLE_D))


@pytest.fixture
def mu5():
    return FuzzySet(tuple(oracles.EXAMPLE_MU))


@pytest.fixture
def fixtures():
    return FIXTURES


def frac(*vals):
    return tuple(Fraction(v) for v in vals)
