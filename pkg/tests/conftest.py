import random
from fractions import Fraction

import pytest

from polyelim.polyring import HomPoly, PolySystem, make_poly, make_system, monomials


def random_poly(n, r, rng, lo=-9, hi=9):
    return make_poly(n, r, [(e, rng.randint(lo, hi)) for e in monomials(n, r)])


def random_sys(n, r, rng, lo=-9, hi=9):
    return make_system([random_poly(n, r, rng, lo, hi) for _ in range(n)])


def unimodular(n, rng, shears=6):
    """Random integer matrix of determinant exactly 1 (product of shears)."""
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-3, 3)
        for col in range(n):
            m[i][col] += k * m[j][col]
    return m


@pytest.fixture
def rng():
    return random.Random(12345)
