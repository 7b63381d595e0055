import json
from fractions import Fraction as F

import pytest

from polyelim.errors import DegreeError, DimensionError, HomogeneityError
from polyelim.polyring import (HomPoly, evaluate, make_poly, monomials, mul,
                               partial, poly_from_json, poly_to_json, power,
                               power_coeff, scale, substitute_linear,
                               system_from_json, system_to_json, make_system,
                               tensor_coeff, variable, zero_poly)
from conftest import random_poly, random_sys, unimodular


def test_make_poly_single_monomial():
    p = make_poly(2, 2, [((2, 0), 1)])
    assert p.coeffs == {(2, 0): F(1)}


def test_make_poly_homogenized_quadratic():
    p = make_poly(2, 2, [((2, 0), 1), ((1, 1), -3), ((0, 2), 2)])
    assert p.coeffs == {(2, 0): F(1), (1, 1): F(-3), (0, 2): F(2)}
    # the same coefficients arise from expanding (x2 - x1)(x2 - 2 x1) with
    # the roles of the variables swapped
    q = mul(make_poly(2, 1, [((1, 0), 1), ((0, 1), -1)]),
            make_poly(2, 1, [((1, 0), 1), ((0, 1), -2)]))
    assert q.coeffs == {(2, 0): F(1), (1, 1): F(-3), (0, 2): F(2)}


def test_make_poly_errors_and_normalization():
    with pytest.raises(HomogeneityError):
        make_poly(2, 2, [((1, 0), 1)])
    with pytest.raises(DimensionError):
        make_poly(2, 2, [((2, 0, 0), 1)])
    p = make_poly(2, 2, [((2, 0), 1), ((2, 0), -1), ((1, 1), F(1, 2)), ((1, 1), F(1, 2))])
    assert p.coeffs == {(1, 1): F(1)}


def test_graded_lex_order_ternary_quartic():
    expect = [(4, 0, 0), (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (2, 0, 2),
              (1, 3, 0), (1, 2, 1), (1, 1, 2), (1, 0, 3), (0, 4, 0), (0, 3, 1),
              (0, 2, 2), (0, 1, 3), (0, 0, 4)]
    assert list(monomials(3, 4)) == expect


def test_tensor_coeff_values():
    p = make_poly(2, 3, [((3, 0), 1), ((2, 1), 3)])
    assert tensor_coeff(p, (1, 1, 2)) == 1
    assert tensor_coeff(p, (1, 1, 1)) == 1
    assert tensor_coeff(make_poly(2, 2, [((2, 0), 1)]), (1, 1)) == 1
    assert tensor_coeff(make_poly(3, 3, [((1, 1, 1), 6)]), (1, 2, 3)) == 1
    with pytest.raises(IndexError):
        tensor_coeff(p, (1, 1, 4))
    with pytest.raises(IndexError):
        tensor_coeff(p, (1, 1))


def test_tensor_monomial_round_trip(rng):
    from math import factorial
    for _ in range(5):
        p = random_poly(3, 3, rng)
        rebuilt = {}
        for e in monomials(3, 3):
            idx = []
            for var, a in enumerate(e, start=1):
                idx.extend([var] * a)
            multinom = factorial(3)
            for a in e:
                multinom //= factorial(a)
            s = multinom * tensor_coeff(p, tuple(idx))
            if s:
                rebuilt[e] = s
        assert rebuilt == dict(p.coeffs)


def test_partial_cubic_pair():
    # a=2, b=3, c=5, d=7: d/dx -> 3a x^2 + 2b xy + c y^2, d/dy -> b x^2 + 2c xy + 3d y^2
    cubic = make_poly(2, 3, [((3, 0), 2), ((2, 1), 3), ((1, 2), 5), ((0, 3), 7)])
    dx = partial(cubic, 1)
    dy = partial(cubic, 2)
    assert dx.coeffs == {(2, 0): F(6), (1, 1): F(6), (0, 2): F(5)}
    assert dy.coeffs == {(2, 0): F(3), (1, 1): F(10), (0, 2): F(21)}
    z = partial(make_poly(2, 2, [((0, 2), 1)]), 1)
    assert z.is_zero() and z.degree == 1


def test_euler_identity(rng):
    for _ in range(5):
        p = random_poly(3, 4, rng)
        v = [F(rng.randint(-5, 5)) for _ in range(3)]
        total = sum(v[i] * evaluate(partial(p, i + 1), v) for i in range(3))
        assert total == 4 * evaluate(p, v)


def test_power_coeff_examples():
    assert power_coeff(make_poly(2, 1, [((1, 0), 1), ((0, 1), 1)]), 2, (1, 1)) == 2
    p = make_poly(2, 2, [((2, 0), 1), ((1, 1), 1)])
    assert power_coeff(p, 0, (0, 0)) == 1
    assert power_coeff(p, 3, (5, 1)) == 3
    with pytest.raises(DegreeError):
        power_coeff(p, 3, (5, 2))


def _naive_power(p, k):
    out = {(0,) * p.n: F(1)}
    for _ in range(k):
        nxt = {}
        for e1, c1 in out.items():
            for e2, c2 in p.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nxt[e] = nxt.get(e, F(0)) + c1 * c2
        out = nxt
    return {e: c for e, c in out.items() if c}


def test_power_coeff_against_naive_expansion(rng):
    for _ in range(3):
        p = random_poly(3, 2, rng, -4, 4)
        for k in range(1, 5):
            expect = _naive_power(p, k)
            got = power(p, k)
            assert dict(got.coeffs) == expect


def test_ring_ops():
    x = variable(2, 1)
    y = variable(2, 2)
    assert mul(x, y).coeffs == {(1, 1): F(1)}
    assert evaluate(make_poly(2, 2, [((2, 0), 1), ((0, 2), 1)]), (3, 4)) == 25
    assert scale(variable(2, 1, 2), 0).is_zero()
    with pytest.raises(DimensionError):
        mul(x, variable(3, 1))


def test_substitute_linear_preserves_evaluation(rng):
    p = random_poly(3, 3, rng)
    g = unimodular(3, rng)
    q = substitute_linear(p, g)
    v = [F(2), F(-1), F(3)]
    gv = [sum(g[i][j] * v[j] for j in range(3)) for i in range(3)]
    assert evaluate(q, v) == evaluate(p, gv)


def test_system_degree_data():
    sys = make_system([make_poly(2, 2, [((2, 0), 1)]), make_poly(2, 3, [((0, 3), 1)])])
    assert sys.degrees == (2, 3)
    assert sys.partial_degrees == (3, 2)
    assert sys.total_degree == 5


def test_json_round_trip(rng):
    p = random_poly(3, 2, rng)
    assert poly_from_json(poly_to_json(p)) == p
    sys = random_sys(2, 3, rng)
    obj = json.loads(json.dumps(system_to_json(sys)))
    back = system_from_json(obj)
    assert back.polys == sys.polys
    with pytest.raises(HomogeneityError):
        poly_from_json({"n": 2, "degree": 1, "coeffs": {"1,0": "0.5"}})
