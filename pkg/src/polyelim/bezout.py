"""Plucker-coordinate (maximal-minor) resultant formulas.

The n x C(n+r-1, r) coefficient matrix of an equal-degree system has
maximal minors M_{i_1..i_n} (columns numbered 1-based in graded lex);
resultants of low shapes are closed polynomials in these coordinates:
a single minor for 2|1, a symmetric 2x2 determinant for 2|2, a symmetric
3x3 determinant for 2|3, and for 3|2 the Pfaffian of a fixed 8x8
antisymmetric template.

The printed 3x3 display for 2|3 is asymmetric at one entry; the symmetric
Bezout form used here reproduces the accompanying seven-term expansion
exactly, which the asymmetric display does not (its deviation is not a
multiple of the Plucker relation), so the symmetric matrix is taken as
the intended formula.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import exactla
from .calibration import calibrated
from .errors import ShapeError
from .polyring import PolySystem, monomials


@dataclass(frozen=True)
class PluckerTable:
    n: int
    r: int
    minors: Mapping[tuple, Fraction]  # sorted 1-based column tuples

    def __getitem__(self, key) -> Fraction:
        return self.minors[tuple(key)]


def plucker_minors(sys: PolySystem) -> PluckerTable:
    """All maximal minors of the coefficient matrix, columns in graded lex."""
    r = sys.equal_degree()
    cols = list(monomials(sys.n, r))
    matrix = [[p.coeffs.get(e, Fraction(0)) for e in cols] for p in sys.polys]
    table = {}
    for combo in itertools.combinations(range(len(cols)), sys.n):
        sub = [[row[c] for c in combo] for row in matrix]
        table[tuple(c + 1 for c in combo)] = exactla.det(exactla.mat(sub))
    return PluckerTable(sys.n, r, table)


def plucker_relation(t: PluckerTable) -> Fraction:
    """Left-hand side of the quadratic Grassmannian relation; exactly zero
    on any table coming from an actual coefficient matrix."""
    m = t.minors
    if (t.n, t.r) == (2, 3):
        return (m[(1, 2)] * m[(3, 4)] - m[(1, 3)] * m[(2, 4)]
                + m[(1, 4)] * m[(2, 3)])
    if (t.n, t.r) == (3, 2):
        return (m[(1, 2, 3)] * m[(4, 5, 6)] - m[(1, 2, 4)] * m[(3, 5, 6)]
                + m[(1, 2, 5)] * m[(3, 4, 6)] - m[(1, 2, 6)] * m[(3, 4, 5)]
                + m[(1, 3, 4)] * m[(2, 5, 6)] - m[(1, 3, 5)] * m[(2, 4, 6)]
                + m[(1, 3, 6)] * m[(2, 4, 5)] + m[(1, 4, 5)] * m[(2, 3, 6)]
                - m[(1, 4, 6)] * m[(2, 3, 5)] + m[(1, 5, 6)] * m[(2, 3, 4)])
    raise ShapeError(f"no single Plucker relation stored for shape {t.n}|{t.r}")


def _bezout_raw(sys: PolySystem) -> Fraction:
    t = plucker_minors(sys)
    m = t.minors
    r = t.r
    if r == 1:
        return m[(1, 2)]
    if r == 2:
        return m[(1, 2)] * m[(2, 3)] - m[(1, 3)] ** 2
    if r == 3:
        rows = [[m[(1, 2)], m[(1, 3)], m[(1, 4)]],
                [m[(1, 3)], m[(1, 4)] + m[(2, 3)], m[(2, 4)]],
                [m[(1, 4)], m[(2, 4)], m[(3, 4)]]]
        return exactla.det(exactla.mat(rows))
    raise ShapeError(f"no closed Bezout formula for shape 2|{r}")


def resultant_bezout(sys: PolySystem) -> Fraction:
    """Closed Plucker-coordinate resultant for shapes 2|1, 2|2, 2|3."""
    if sys.n != 2:
        raise ShapeError("Bezout closed forms implemented for two variables only")
    r = sys.equal_degree()
    if r not in (1, 2, 3):
        raise ShapeError(f"no closed Bezout formula for shape 2|{r}")
    return calibrated(f"bezout-2|{r}", _bezout_raw, sys)


# ---------------------------------------------------------------------------
# The 3|2 Pfaffian formula

# Upper triangle of the 8x8 antisymmetric template; entries are signed sums
# of minors M_{ijk}.  Pinned entry-for-entry by a regression test.
_PFAFF_TEMPLATE = {
    (0, 1): ((1, (3, 5, 6)),),
    (0, 2): ((1, (4, 5, 6)),),
    (0, 3): ((1, (2, 4, 6)),),
    (0, 4): ((1, (1, 5, 6)),),
    (0, 5): ((1, (1, 4, 6)),),
    (0, 6): ((1, (2, 5, 6)),),
    (0, 7): ((1, (3, 4, 6)),),
    (1, 2): ((-1, (3, 4, 6)),),
    (1, 3): ((1, (1, 4, 6)),),
    (1, 4): ((1, (1, 3, 6)),),
    (1, 5): ((1, (1, 2, 6)),),
    (1, 6): ((1, (2, 3, 6)),),
    (1, 7): ((1, (1, 5, 6)), (-1, (2, 3, 6))),
    (2, 3): ((1, (2, 4, 5)),),
    (2, 4): ((1, (1, 4, 6)),),
    (2, 5): ((1, (1, 4, 5)),),
    (2, 6): ((1, (2, 4, 6)),),
    (2, 7): ((1, (3, 4, 5)),),
    (3, 4): ((1, (1, 3, 4)),),
    (3, 5): ((1, (1, 2, 4)),),
    (3, 6): ((1, (2, 3, 4)), (-1, (1, 4, 5))),
    (3, 7): ((-1, (2, 3, 4)),),
    (4, 5): ((1, (1, 2, 3)),),
    (4, 6): ((-1, (1, 2, 6)),),
    (4, 7): ((1, (1, 2, 6)), (-1, (1, 3, 5))),
    (5, 6): ((1, (1, 3, 4)), (-1, (1, 2, 5))),
    (5, 7): ((-1, (1, 3, 4)),),
    (6, 7): ((1, (1, 4, 6)), (-1, (2, 3, 5))),
}


def pfaffian_matrix_32(minors: Mapping[tuple, object], zero):
    """The 8x8 antisymmetric template filled from a minor table.  Works
    over any ring with +/- (exact rationals, or polynomials for symbolic
    expansion)."""
    rows = [[zero for _ in range(8)] for _ in range(8)]
    for (i, j), terms in _PFAFF_TEMPLATE.items():
        acc = zero
        for sign, key in terms:
            acc = acc + minors[key] if sign == 1 else acc - minors[key]
        rows[i][j] = acc
        rows[j][i] = -acc
    return rows


def _pfaffian_raw(sys: PolySystem) -> Fraction:
    t = plucker_minors(sys)
    rows = pfaffian_matrix_32(t.minors, Fraction(0))
    return exactla.pfaffian(exactla.mat(rows))


def resultant_pfaffian_32(sys: PolySystem) -> Fraction:
    if (sys.n, sys.equal_degree()) != (3, 2):
        raise ShapeError("Pfaffian formula is specific to shape 3|2")
    return calibrated("pfaffian-3|2", _pfaffian_raw, sys)


# ---------------------------------------------------------------------------
# The explicit degree-4 expansion of the 3|2 resultant in minors: a second
# evaluation path kept for tests only (it pins the Pfaffian up to one
# global constant on actual systems).

_R32_EXPANSION_TEXT = """
+ M123 M145 M156 M456 - M123 M145 M236 M456 - M123 M145 M345 M356 + M123 M145 M346 M346
- M123 M146 M146 M456 + M123 M146 M235 M456 + M123 M146 M245 M356 - 2 M123 M146 M246 M346
- M123 M156 M234 M456 + M123 M156 M246 M246 + M123 M234 M246 M356 + M123 M234 M345 M356
- M123 M234 M346 M346 - M123 M235 M245 M356 + M123 M235 M246 M346 + M123 M236 M245 M346
- M123 M236 M246 M246 - M123 M236 M246 M345 - M124 M126 M156 M456 + M124 M126 M246 M356
+ M124 M126 M345 M356 - M124 M126 M346 M346 + M124 M135 M236 M456 - M124 M135 M246 M356
+ M124 M136 M146 M456 - M124 M136 M235 M456 + M124 M136 M246 M346 - M124 M146 M146 M356
+ M124 M146 M156 M346 + M124 M146 M235 M356 - M124 M146 M236 M346 - M124 M156 M156 M246
- M124 M156 M235 M346 + M124 M156 M236 M246 + M124 M156 M236 M345 + M125 M126 M146 M456
- M125 M126 M245 M356 + M125 M126 M246 M346 + M125 M134 M156 M456 - M125 M134 M236 M456
- M125 M134 M345 M356 + M125 M134 M346 M346 - M125 M135 M146 M456 + M125 M135 M245 M356
- M125 M135 M246 M346 + M125 M136 M234 M456 - M125 M136 M245 M346 + M125 M136 M246 M345
+ M125 M146 M146 M346 - M125 M146 M156 M246 - M125 M146 M156 M345 - M125 M146 M234 M356
+ M125 M146 M236 M246 + M125 M156 M156 M245 + M125 M156 M234 M346 - M125 M156 M236 M245
- M126 M126 M145 M456 + M126 M126 M245 M346 - M126 M126 M246 M246 - M126 M126 M246 M345
- M126 M134 M146 M456 + M126 M134 M235 M456 - M126 M134 M246 M346 + M126 M135 M145 M456
- M126 M135 M234 M456 + M126 M135 M246 M246 + M126 M145 M145 M356 - 3 M126 M145 M146 M346
+ M126 M145 M156 M246 + M126 M145 M156 M345 + 2 M126 M146 M146 M246 + M126 M146 M146 M345
- 2 M126 M146 M156 M245 + M126 M146 M234 M346 - M126 M146 M235 M246 - M126 M156 M234 M246
- M126 M156 M234 M345 + M126 M156 M235 M245 - M134 M134 M156 M456 + M134 M134 M246 M356
+ M134 M134 M345 M356 - M134 M134 M346 M346 + M134 M135 M146 M456 - M134 M135 M245 M356
+ M134 M135 M246 M346 - M134 M136 M145 M456 + M134 M136 M245 M346 - M134 M136 M246 M246
- M134 M136 M246 M345 + 2 M134 M145 M146 M356 - M134 M145 M156 M346 - M134 M145 M235 M356
+ M134 M145 M236 M346 - 2 M134 M146 M146 M346 + 3 M134 M146 M156 M246 + M134 M146 M156 M345
+ M134 M146 M235 M346 - M134 M146 M236 M246 - M134 M146 M236 M345 - M134 M156 M156 M245
- M135 M145 M145 M356 + M135 M145 M146 M346 + M135 M145 M234 M356 - M135 M145 M236 M246
- M135 M146 M146 M246 - M135 M146 M234 M346 + M135 M146 M236 M245 + M136 M145 M145 M346
- M136 M145 M146 M246 - M136 M145 M146 M345 - M136 M145 M234 M346 + M136 M145 M235 M246
+ M136 M146 M146 M245 + M136 M146 M234 M246 + M136 M146 M234 M345 - M136 M146 M235 M245
- M145 M145 M156 M156 + M145 M145 M156 M236 + 2 M145 M146 M146 M156 - M145 M146 M146 M236
- M145 M146 M156 M235 + M145 M156 M156 M234 - M146 M146 M146 M146 + M146 M146 M146 M235
- M146 M146 M156 M234 + M256 M123 M146 M345 - M256 M123 M156 M245 - M256 M123 M234 M346
+ M256 M123 M236 M245 - M256 M124 M126 M346 + M256 M124 M135 M346 - M256 M124 M136 M345
+ M256 M124 M146 M156 - M256 M124 M146 M236 + M256 M126 M126 M245 + M256 M126 M134 M345
- M256 M126 M135 M245 - M256 M126 M145 M146 + M256 M126 M146 M234 - M256 M134 M134 M346
+ M256 M134 M136 M245 - M256 M134 M145 M156 + M256 M134 M145 M236 - M256 M134 M146 M146
+ M256 M135 M145 M146 - M256 M136 M145 M234
"""


def _parse_expansion(text: str):
    terms = []
    token = re.compile(r"([+-])\s*(\d*)\s*((?:M\d{3}\s*){4})")
    for sign, coeff, minors in token.findall(text):
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        keys = tuple(tuple(int(ch) for ch in m[1:]) for m in minors.split())
        terms.append((c, keys))
    return tuple(terms)


_R32_EXPANSION = _parse_expansion(_R32_EXPANSION_TEXT)


def _resultant_32_minor_expansion(minors: Mapping[tuple, Fraction]) -> Fraction:
    total = Fraction(0)
    for c, keys in _R32_EXPANSION:
        prod = Fraction(c)
        for k in keys:
            prod *= minors[k]
        total += prod
    return total
