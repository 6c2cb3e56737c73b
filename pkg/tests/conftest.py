import pytest

from simds import GF


@pytest.fixture(scope="session")
def gf4():
    return GF(2, 2, 0b111)


@pytest.fixture(scope="session")
def gf8():
    # x^3 + x^2 + 1, the modulus used by the worked 3x3 fixtures
    return GF(2, 3, 0b1101)


@pytest.fixture(scope="session")
def gf8b():
    # x^3 + x + 1, the other degree-3 modulus
    return GF(2, 3, 0b1011)


@pytest.fixture(scope="session")
def gf16a():
    # x^4 + x + 1
    return GF(2, 4, 0b10011)


@pytest.fixture(scope="session")
def gf16b():
    # x^4 + x^3 + 1
    return GF(2, 4, 0b11001)


@pytest.fixture(scope="session")
def f11():
    return GF(11)
