"""Sylvester matrices: the square two-variable case, the rectangular
generalized construction, and the root-product oracle.

Layout of the square matrix for f (degree r1) and g (degree r2) in two
variables: rows are m*f for every multiplier monomial m of degree r2-1 in
graded lex, then m*g for multipliers of degree r1-1; columns are the
degree-(r1+r2-1) monomials in graded lex.  This reproduces the classical
ladder displays entry for entry, and its determinant matches the
root-product convention a^{r2} b^{r1} prod (beta_j - alpha_i) under the
homogenization f(x1, x2) = a * prod(x2 - alpha_i x1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import exactla
from .errors import DegreeError, DimensionError
from .exactla import ExactMat
from .polyring import HomPoly, PolySystem, make_poly, monomial_index, monomials, mul


def _rows_for(p: HomPoly, mult_degree: int, col_index) -> list:
    rows = []
    for m in monomials(2, mult_degree):
        row = [Fraction(0)] * len(col_index)
        for e, c in p.coeffs.items():
            target = (e[0] + m[0], e[1] + m[1])
            row[col_index[target]] = c
        rows.append(row)
    return rows


def sylvester_matrix(f: HomPoly, g: HomPoly) -> ExactMat:
    if f.n != 2 or g.n != 2:
        raise DimensionError("square Sylvester matrices exist only for two variables")
    r1, r2 = f.degree, g.degree
    if r1 < 1 or r2 < 1:
        raise DegreeError("both degrees must be at least 1")
    cols = monomial_index(2, r1 + r2 - 1)
    rows = _rows_for(f, r2 - 1, cols) + _rows_for(g, r1 - 1, cols)
    return exactla.mat(rows)


def resultant_2(f: HomPoly, g: HomPoly) -> Fraction:
    """det of the square Sylvester matrix; the canonical two-variable
    resultant (the monomial reference system already comes out +1)."""
    return exactla.det(sylvester_matrix(f, g))


def generalized_sylvester(sys: PolySystem, q: int) -> ExactMat:
    """Rectangular matrix of all m*f_i with multiplier monomials m of
    degree q, for an equal-degree system.  Rows grouped by equation, each
    block ordered by multiplier monomial in graded lex; columns are the
    degree-(r+q) monomials in graded lex.
    """
    r = sys.equal_degree()
    if q < 0:
        raise DegreeError("multiplier degree must be nonnegative")
    cols = monomial_index(sys.n, r + q)
    rows = []
    for p in sys.polys:
        for m in monomials(sys.n, q):
            row = [Fraction(0)] * len(cols)
            for e, c in p.coeffs.items():
                target = tuple(a + b for a, b in zip(e, m))
                row[cols[target]] = c
            rows.append(row)
    return exactla.mat(rows)


def resultant_from_roots(alpha: Sequence, beta: Sequence, a, b) -> Fraction:
    """Root-product oracle: a^{r2} b^{r1} prod_{i,j} (beta_j - alpha_i)."""
    a = Fraction(a)
    b = Fraction(b)
    value = a ** len(beta) * b ** len(alpha)
    for ai in alpha:
        for bj in beta:
            value *= Fraction(bj) - Fraction(ai)
    return value


def poly_from_roots(roots: Sequence, lead) -> HomPoly:
    """Homogenization a * prod(x2 - alpha_i x1) as a polynomial in (x1, x2)."""
    p = make_poly(2, 0, [((0, 0), lead)])
    for alpha in roots:
        factor = make_poly(2, 1, [((0, 1), 1), ((1, 0), -Fraction(alpha))])
        p = mul(p, factor)
    return p
