import itertools
import random
from fractions import Fraction as F

import pytest

from polyelim import exactla
from polyelim.errors import AntisymmetryError, ShapeError
from polyelim.exactla import det, identity, mat, minor, pfaffian, rank


def rand_mat(n, m, rng, lo=-6, hi=6):
    return mat([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)])


def test_det_basics():
    assert det(identity(4)) == 1
    assert det(mat([[1, 2], [3, 4]])) == -2
    with pytest.raises(ShapeError):
        det(mat([[1, 2, 3], [4, 5, 6]]))


def test_det_gradient_pair_matrix():
    # Sylvester matrix of {3x^2 + 0xy + 0y^2, 0x^2 + 0xy + 3y^2}: the
    # determinant is 81, three times the loosely normalized classical
    # discriminant value 27 of the underlying cubic x^3 + y^3.
    m = mat([[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]])
    assert det(m) == 81 == 3 * 27


def test_det_rational_entries():
    m = mat([[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]])
    assert det(m) == F(1, 14) - F(1, 15)


def test_det_multiplicative(rng):
    for _ in range(5):
        a = rand_mat(4, 4, rng)
        b = rand_mat(4, 4, rng)
        assert det(exactla.matmul(a, b)) == det(a) * det(b)


def test_minor_examples():
    m = mat([[1, 2], [3, 4]])
    assert minor(m, (1, 2), (1, 2)) == det(m)
    assert minor(identity(3), (1,), (2,)) == 0
    assert minor(mat([[1, 2, 3], [4, 5, 6]]), (1, 2), (1, 3)) == -6
    with pytest.raises(ShapeError):
        minor(m, (1,), (1, 2))
    with pytest.raises(ShapeError):
        minor(m, (1, 3), (1, 2))


def test_laplace_expansion_reconstructs_det(rng):
    m = rand_mat(5, 5, rng)
    rows = (1, 2)
    total = F(0)
    for cols in itertools.combinations(range(1, 6), 2):
        comp_rows = tuple(r for r in range(1, 6) if r not in rows)
        comp_cols = tuple(c for c in range(1, 6) if c not in cols)
        sign = (-1) ** (sum(rows) + sum(cols))
        total += sign * minor(m, rows, cols) * minor(m, comp_rows, comp_cols)
    assert total == det(m)


def test_pfaffian_basics():
    assert pfaffian(mat([[0, 5], [-5, 0]])) == 5
    block = mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert pfaffian(block) == 1
    with pytest.raises(ShapeError):
        pfaffian(mat([[0]]))
    with pytest.raises(AntisymmetryError):
        pfaffian(mat([[0, 1], [1, 0]]))


def test_pfaffian_squares_to_det(rng):
    for _ in range(4):
        raw = [[0] * 6 for _ in range(6)]
        for i in range(6):
            for j in range(i + 1, 6):
                v = rng.randint(-5, 5)
                raw[i][j] = v
                raw[j][i] = -v
        m = mat(raw)
        assert pfaffian(m) ** 2 == det(m)


def test_rank():
    assert rank(mat([[0, 0], [0, 0]])) == 0
    assert rank(identity(5)) == 5
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(mat([[1, 2, 3], [4, 5, 6], [5, 7, 9]])) == 2
