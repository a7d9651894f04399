import pytest

from charsum.constructions import hn_character, hn_presentation
from charsum.ring import cyclotomic, extension_field, prime_field


@pytest.fixture
def q4():
    return cyclotomic(4)


@pytest.fixture
def gf4():
    return extension_field(2, (1, 1, 1))


@pytest.fixture
def f3():
    return prime_field(3)


@pytest.fixture
def h1():
    return hn_presentation(1)


@pytest.fixture
def h2():
    return hn_presentation(2)


def hn(P, F, a, z):
    """Shorthand for the H_n character (a_1, ..., a_n, z)."""
    if not isinstance(a, (list, tuple)):
        a = [a]
    return hn_character(P, F, [F(x) for x in a], F(z))
