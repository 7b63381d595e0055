"""Exact dense linear algebra over the rationals.

Determinants go through fraction-free Bareiss elimination on an integer
matrix obtained by clearing row denominators; the cleared factor is divided
back out at the end.  This keeps intermediate entries to minors of the
input instead of the uncontrolled swell of naive rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import metrics
from .errors import AntisymmetryError, ShapeError


@dataclass(frozen=True)
class ExactMat:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def tolists(self):
        return [list(self.row(r)) for r in range(self.rows)]


def mat(rows_of_entries) -> ExactMat:
    rows = len(rows_of_entries)
    cols = len(rows_of_entries[0]) if rows else 0
    flat = []
    for row in rows_of_entries:
        if len(row) != cols:
            raise ShapeError("ragged rows")
        flat.extend(Fraction(x) for x in row)
    return ExactMat(rows, cols, tuple(flat))


def identity(k: int) -> ExactMat:
    return ExactMat(k, k, tuple(Fraction(1) if i == j else Fraction(0)
                                for i in range(k) for j in range(k)))


def matmul(a: ExactMat, b: ExactMat) -> ExactMat:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    bcols = [[b[r, c] for r in range(b.rows)] for c in range(b.cols)]
    for r in range(a.rows):
        arow = a.row(r)
        for col in bcols:
            out.append(sum(x * y for x, y in zip(arow, col)))
    return ExactMat(a.rows, b.cols, tuple(out))


def is_zero(a: ExactMat) -> bool:
    return all(x == 0 for x in a.entries)


def _clear_rows(m: ExactMat):
    """Integer row-major copy plus the product of the per-row multipliers."""
    cleared = []
    factor = 1
    for r in range(m.rows):
        row = m.row(r)
        mult = lcm(*(x.denominator for x in row)) if row else 1
        factor *= mult
        cleared.append([int(x * mult) for x in row])
    return cleared, factor


def _bareiss_det(rows) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
        metrics.note_int(pivot)
    metrics.note_int(m[n - 1][n - 1])
    return sign * m[n - 1][n - 1]


def det(m: ExactMat) -> Fraction:
    if m.rows != m.cols:
        raise ShapeError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    cleared, factor = _clear_rows(m)
    return Fraction(_bareiss_det(cleared), factor)


def minor(m: ExactMat, row_set: Sequence[int], col_set: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on the given 1-based index sets, taken
    in ascending order."""
    rows = sorted(row_set)
    cols = sorted(col_set)
    if len(rows) != len(cols):
        raise ShapeError(f"minor needs equal index-set sizes, got {len(rows)} and {len(cols)}")
    if rows and (rows[0] < 1 or rows[-1] > m.rows):
        raise ShapeError(f"row indices {rows} out of range 1..{m.rows}")
    if cols and (cols[0] < 1 or cols[-1] > m.cols):
        raise ShapeError(f"column indices {cols} out of range 1..{m.cols}")
    sub = [[m[r - 1, c - 1] for c in cols] for r in rows]
    return det(mat(sub)) if rows else Fraction(1)


def rank(m: ExactMat) -> int:
    """Exact rank via fraction-free elimination with full column search."""
    cleared, _ = _clear_rows(m)
    rows = [r[:] for r in cleared]
    nrows, ncols = m.rows, m.cols
    rk = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pivot = rows[rk][c]
        for r in range(rk + 1, nrows):
            ric = rows[r][c]
            for j in range(c, ncols):
                rows[r][j] = (pivot * rows[r][j] - ric * rows[rk][j]) // prev
        prev = pivot
        rk += 1
        if rk == nrows:
            break
    return rk


def pfaffian_generic(rows, zero):
    """Pfaffian by expansion along the first row, over any commutative ring.

    `rows` is a list of lists of ring elements; `zero` is the ring zero
    (used for even-0 base case result 1 is built by the caller's ring, so
    here the empty Pfaffian returns None and callers special-case it).
    Convention: pf([[0, a], [-a, 0]]) = a, and pf(A)^2 = det(A).
    """
    k = len(rows)
    if k == 0:
        return None
    if k == 2:
        return rows[0][1]
    acc = zero
    rest_all = list(range(1, k))
    for pos, j in enumerate(rest_all):
        a = rows[0][j]
        if a == zero:
            continue
        keep = [t for t in rest_all if t != j]
        sub = [[rows[r][c] for c in keep] for r in keep]
        term = a * pfaffian_generic(sub, zero)
        # removing column j after row 0 contributes (-1)^pos
        acc = acc + term if pos % 2 == 0 else acc - term
    return acc


def pfaffian(m: ExactMat) -> Fraction:
    if m.rows != m.cols:
        raise ShapeError(f"Pfaffian of non-square {m.rows}x{m.cols} matrix")
    if m.rows % 2 != 0:
        raise ShapeError(f"Pfaffian needs even dimension, got {m.rows}")
    for r in range(m.rows):
        for c in range(r, m.cols):
            if m[r, c] != -m[c, r]:
                raise AntisymmetryError(f"entry ({r},{c}) breaks antisymmetry")
    if m.rows == 0:
        return Fraction(1)
    val = pfaffian_generic(m.tolists(), Fraction(0))
    return Fraction(val)
