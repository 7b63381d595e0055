"""Division-free determinantal resultants that mix a coefficient block with
a Jacobian-derived block.

For three equations of degree r there are two square constructions:
  variant "a": multiplier monomials of degree r-1 on the equations plus
      the Jacobian-like coefficients with r-2 lower indices, matrix size
      r(2r+1);
  variant "b" (default, smaller): multipliers of degree r-2 plus
      coefficients with r-1 lower indices, matrix size r(2r-1).
For four quadrics the single known construction is {x_i f_j, J_k}, 20x20.

The Jacobian-like generating object is the determinant of the matrix whose
(i, j) entry is sum_m grad-shift^m(df_i/dx_j) / ((r-1)(r-2)...(r-m)),
where grad-shift(h) = sum_k p_k dh/dx_k introduces the auxiliary p
variables.  Expanding in p-monomials p^alpha, the coefficient with lower
index multiset alpha is (prod alpha_t!) times the p^alpha coefficient;
this normalization is pinned by the r=2 identity J_i = dJ/dx_i and by
cross-method agreement at r=3.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from . import exactla
from .calibration import calibrated
from .errors import RangeError, ShapeError, SquarenessError
from .polyring import (HomPoly, PolySystem, monomial_index, monomials, mul,
                       partial, zero_poly)


def poly_det(rows) -> HomPoly:
    """Determinant of a square matrix of polynomials, by permutation
    expansion (intended for the small matrices that appear here)."""
    k = len(rows)
    n = rows[0][0].n
    total_deg = sum(rows[i][i].degree for i in range(k))
    acc = zero_poly(n, total_deg)
    for perm in itertools.permutations(range(k)):
        inversions = sum(1 for a in range(k) for b in range(a + 1, k)
                         if perm[a] > perm[b])
        term = rows[0][perm[0]]
        for i in range(1, k):
            if term.is_zero():
                break
            term = mul(term, rows[i][perm[i]])
        if inversions % 2:
            term = -term
        acc = acc + term
    return acc


def jacobian(sys: PolySystem) -> HomPoly:
    """det(df_i/dx_j), homogeneous of degree n(r-1)."""
    rows = [[partial(p, j + 1) for j in range(sys.n)] for p in sys.polys]
    return poly_det(rows)


def _lift_to_xp(p: HomPoly, n: int) -> HomPoly:
    """Embed an n-variable polynomial into the 2n-variable (x, p) ring."""
    pad = (0,) * n
    return HomPoly(2 * n, p.degree, {e + pad: c for e, c in p.coeffs.items()})


def _grad_shift(h: HomPoly, n: int) -> HomPoly:
    """sum_k p_k * dh/dx_k inside the 2n-variable ring."""
    out = zero_poly(2 * n, h.degree)
    for k in range(n):
        d = partial(h, k + 1)
        shifted = {e[:n] + tuple(v + (1 if t == k else 0) for t, v in enumerate(e[n:])): c
                   for e, c in d.coeffs.items()}
        out = out + HomPoly(2 * n, h.degree, shifted)
    return out


def jac_like_matrix(sys: PolySystem) -> list:
    """The p-augmented derivative matrix in the 2n-variable ring."""
    n = sys.n
    r = sys.equal_degree()
    rows = []
    for p in sys.polys:
        row = []
        for j in range(n):
            entry = _lift_to_xp(partial(p, j + 1), n)
            term = entry
            denom = 1
            for m in range(1, r):
                term = _grad_shift(term, n)
                denom *= (r - m)
                entry = entry + Fraction(1, denom) * term
            row.append(entry)
        rows.append(row)
    return rows


def _extract_jac_coeff(big: HomPoly, n: int, alpha: tuple) -> HomPoly:
    deg = big.degree - sum(alpha)
    picked = {}
    for e, c in big.coeffs.items():
        if e[n:] == alpha:
            picked[e[:n]] = c
    norm = 1
    for a in alpha:
        norm *= factorial(a)
    return HomPoly(n, deg, {e: norm * c for e, c in picked.items() if c != 0})


def jac_like_coeff(sys: PolySystem, kappa: tuple) -> HomPoly:
    """Jacobian-like coefficient with lower index multiset kappa (1-based
    variable indices); kappa = () gives the plain Jacobian."""
    n = sys.n
    r = sys.equal_degree()
    kappa = tuple(sorted(kappa))
    if len(kappa) > r - 1:
        raise RangeError(f"lower index count {len(kappa)} exceeds r-1 = {r - 1}")
    if any(not 1 <= t <= n for t in kappa):
        raise ShapeError(f"lower indices {kappa} out of range 1..{n}")
    if not kappa:
        return jacobian(sys)
    alpha = [0] * n
    for t in kappa:
        alpha[t - 1] += 1
    big = poly_det(jac_like_matrix(sys))
    return _extract_jac_coeff(big, n, tuple(alpha))


def _expand_rows(polys, n: int, degree: int):
    index = monomial_index(n, degree)
    rows = []
    for p in polys:
        if p.degree != degree:
            raise SquarenessError(f"row polynomial of degree {p.degree}, basis degree {degree}")
        row = [Fraction(0)] * len(index)
        for e, c in p.coeffs.items():
            row[index[e]] = c
        rows.append(row)
    return rows


def _assemble(sys: PolySystem, mult_degree: int, kappa_size: int) -> exactla.ExactMat:
    n = sys.n
    col_degree = mult_degree + sys.equal_degree()
    polys = []
    for m in monomials(n, mult_degree):
        mono = HomPoly(n, mult_degree, {m: Fraction(1)})
        for f in sys.polys:
            polys.append(mul(mono, f))
    if kappa_size == 0:
        polys.append(jacobian(sys))
    else:
        big = poly_det(jac_like_matrix(sys))
        for kappa in itertools.combinations_with_replacement(range(n), kappa_size):
            alpha = [0] * n
            for t in kappa:
                alpha[t] += 1
            polys.append(_extract_jac_coeff(big, n, tuple(alpha)))
    rows = _expand_rows(polys, n, col_degree)
    size = len(rows[0])
    if len(rows) != size:
        raise SquarenessError(f"assembled {len(rows)} rows against {size} columns")
    return exactla.mat(rows)


def _raw_hybrid(sys: PolySystem, variant: str) -> Fraction:
    n = sys.n
    r = sys.equal_degree()
    if n == 3 and r >= 2:
        if variant == "a":
            m = _assemble(sys, r - 1, r - 2)
            expect = r * (2 * r + 1)
        else:
            m = _assemble(sys, r - 2, r - 1)
            expect = r * (2 * r - 1)
    elif (n, r) == (4, 2):
        m = _assemble(sys, 1, 1)
        expect = 20
    else:
        raise ShapeError(f"no hybrid determinantal formula for shape {n}|{r}")
    if m.rows != expect:
        raise SquarenessError(f"expected {expect} rows, assembled {m.rows}")
    return exactla.det(m)


def resultant_hybrid(sys: PolySystem, variant: str = "b") -> Fraction:
    """Canonical resultant via the mixed coefficient/Jacobian determinant.
    Shapes: three equations of any degree >= 2, or four quadrics."""
    if variant not in ("a", "b"):
        raise ShapeError(f"unknown variant {variant!r}, expected 'a' or 'b'")
    return calibrated(f"hybrid-{variant}", lambda s: _raw_hybrid(s, variant), sys)
