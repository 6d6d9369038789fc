from __future__ import annotations

import random
from fractions import Fraction

import pytest

from guttstar.liealg import abelian, filiform4, heisenberg, sl2
from guttstar.sym import Seminorm, SymElement


@pytest.fixture(scope="session")
def heis():
    return heisenberg()


@pytest.fixture(scope="session")
def ab3():
    return abelian(3)


@pytest.fixture(scope="session")
def sl2_algebra():
    return sl2()


@pytest.fixture(scope="session")
def fil4():
    return filiform4()


@pytest.fixture(scope="session")
def all_algebras(heis, ab3, sl2_algebra, fil4):
    return [heis, ab3, sl2_algebra, fil4]


@pytest.fixture
def rng():
    return random.Random(0)


def random_vector(L, rng, span=4):
    return tuple(
        Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(L.dim)
    )


def random_nonzero_vector(L, rng, span=4):
    while True:
        v = random_vector(L, rng, span)
        if any(v):
            return v


def random_monomial(L, rng, max_degree):
    alpha = [0] * L.dim
    for _ in range(rng.randint(0, max_degree)):
        alpha[rng.randrange(L.dim)] += 1
    return tuple(alpha)


def random_element(L, rng, max_degree, terms=3):
    data = {}
    for _ in range(terms):
        alpha = random_monomial(L, rng, max_degree)
        num = rng.randint(-9, 9) or 1
        data[alpha] = data.get(alpha, 0) + Fraction(num, rng.randint(1, 9))
    return SymElement(L, data)


@pytest.fixture(scope="session")
def unit_norm(heis):
    return Seminorm.ell1(heis)
