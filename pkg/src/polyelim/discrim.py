"""Discriminants: gradient-system resultants, closed invariant formulas,
and the symmetric-polynomial factorizations.

Normalization of the gradient route: the resultant of the n partials
carries a known power of r on top of the discriminant (Boole's constant
r^(((r-1)^n - (-1)^n)/r)), which is divided out so that the binary cubic
comes out as the classical quartic polynomial in its coefficients; the
reference power form x_1^r + ... + x_n^r then always has a positive
discriminant.

Invariant formulas are stored as explicit expansions in symmetric-tensor
coefficients, together with the epsilon-contraction definitions that
generate them (the contraction evaluator doubles as a regression oracle).
The degree-4/degree-6 pair of the ternary cubic is normalized so that the
boxed combination 32*I4^3 + 3*I6^2 is exactly proportional to the
discriminant; this forces the opposite overall sign on the degree-4
expansion from the one displayed alongside it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import DegreeError, RangeError, ShapeError
from .polyring import (HomPoly, PolySystem, make_system, partial,
                       tensor_coeff, zero_poly)

# ---------------------------------------------------------------------------
# Gradient route


def gradient_system(p: HomPoly) -> PolySystem:
    if p.degree < 2:
        raise DegreeError("gradient system needs degree at least 2")
    return make_system([partial(p, i + 1) for i in range(p.n)])


def boole_exponent(n: int, r: int) -> int:
    """Power of r separating the gradient resultant from the discriminant:
    ((r-1)^n - (-1)^n) / r, always an integer."""
    return ((r - 1) ** n - (-1) ** n) // r


def discriminant(p: HomPoly, method: str = "auto") -> Fraction:
    """Discriminant of a single form via the resultant of its gradient."""
    from . import crosscheck
    grad = gradient_system(p)
    res = crosscheck.resultant(grad, method)
    return res / Fraction(p.degree) ** boole_exponent(p.n, p.degree)


# ---------------------------------------------------------------------------
# Invariants of low binary/ternary forms

# tag -> (n, r, slot names, epsilon index groups, prefactor applied to the
# raw contraction).  Each label appears once in an epsilon group and once
# in the like-named tensor slot.
_CONTRACTIONS = {
    "I4@2|3": (2, 3, "ijkl",
               (("i1", "j1"), ("i2", "j2"), ("k1", "l1"), ("k2", "l2"),
                ("i3", "k3"), ("j3", "l3")), Fraction(-1)),
    "I2@2|4": (2, 4, "ij",
               (("i1", "j1"), ("i2", "j2"), ("i3", "j3"), ("i4", "j4")),
               Fraction(1)),
    "I3@2|4": (2, 4, "ijk",
               (("i1", "j1"), ("i2", "j2"), ("i3", "k1"), ("i4", "k2"),
                ("j3", "k3"), ("j4", "k4")), Fraction(1)),
    "I4@2|5": (2, 5, "ijkl",
               (("i1", "j1"), ("i2", "j2"), ("i3", "j3"), ("i4", "k4"),
                ("i5", "k5"), ("j4", "l4"), ("j5", "l5"), ("k1", "l1"),
                ("k2", "l2"), ("k3", "l3")), Fraction(-1)),
    "I4@3|3": (3, 3, "ijkl",
               (("i1", "j1", "k1"), ("i2", "j2", "l2"), ("i3", "k3", "l3"),
                ("l1", "k2", "j3")), Fraction(1, 4)),
    "I6@3|3": (3, 3, "ijklms",
               (("i1", "k1", "l1"), ("i2", "j2", "s2"), ("j1", "k2", "m1"),
                ("l2", "m2", "k3"), ("m3", "s3", "j3"), ("l3", "i3", "s1")),
               Fraction(-1)),
}

# Explicit expansions in tensor coefficients (S entries indexed by digit
# strings), generated once from the contractions above and frozen.
_EXPANSIONS = {
    "I4@2|3": (
        (2, ('111', '111', '222', '222')),
        (-12, ('111', '112', '122', '222')),
        (8, ('111', '122', '122', '122')),
        (8, ('112', '112', '112', '222')),
        (-6, ('112', '112', '122', '122')),
    ),
    "I2@2|4": (
        (2, ('1111', '2222')),
        (-8, ('1112', '1222')),
        (6, ('1122', '1122')),
    ),
    "I3@2|4": (
        (6, ('1111', '1122', '2222')),
        (-6, ('1111', '1222', '1222')),
        (-6, ('1112', '1112', '2222')),
        (12, ('1112', '1122', '1222')),
        (-6, ('1122', '1122', '1122')),
    ),
    "I4@2|5": (
        (2, ('11111', '11111', '22222', '22222')),
        (-20, ('11111', '11112', '12222', '22222')),
        (8, ('11111', '11122', '11222', '22222')),
        (32, ('11111', '11122', '12222', '12222')),
        (-24, ('11111', '11222', '11222', '12222')),
        (32, ('11112', '11112', '11222', '22222')),
        (18, ('11112', '11112', '12222', '12222')),
        (-24, ('11112', '11122', '11122', '22222')),
        (-152, ('11112', '11122', '11222', '12222')),
        (96, ('11112', '11222', '11222', '11222')),
        (96, ('11122', '11122', '11122', '12222')),
        (-64, ('11122', '11122', '11222', '11222')),
    ),
    "I4@3|3": (
        (-6, ('111', '122', '223', '333')),
        (6, ('111', '122', '233', '233')),
        (6, ('111', '123', '222', '333')),
        (-6, ('111', '123', '223', '233')),
        (-6, ('111', '133', '222', '233')),
        (6, ('111', '133', '223', '223')),
        (6, ('112', '112', '223', '333')),
        (-6, ('112', '112', '233', '233')),
        (-6, ('112', '113', '222', '333')),
        (6, ('112', '113', '223', '233')),
        (-6, ('112', '122', '123', '333')),
        (6, ('112', '122', '133', '233')),
        (12, ('112', '123', '123', '233')),
        (-18, ('112', '123', '133', '223')),
        (6, ('112', '133', '133', '222')),
        (6, ('113', '113', '222', '233')),
        (-6, ('113', '113', '223', '223')),
        (6, ('113', '122', '122', '333')),
        (-18, ('113', '122', '123', '233')),
        (6, ('113', '122', '133', '223')),
        (12, ('113', '123', '123', '223')),
        (-6, ('113', '123', '133', '222')),
        (-6, ('122', '122', '133', '133')),
        (12, ('122', '123', '123', '133')),
        (-6, ('123', '123', '123', '123')),
    ),
    "I6@3|3": (
        (-6, ('111', '111', '222', '222', '333', '333')),
        (36, ('111', '111', '222', '223', '233', '333')),
        (-24, ('111', '111', '222', '233', '233', '233')),
        (-24, ('111', '111', '223', '223', '223', '333')),
        (18, ('111', '111', '223', '223', '233', '233')),
        (36, ('111', '112', '122', '222', '333', '333')),
        (-108, ('111', '112', '122', '223', '233', '333')),
        (72, ('111', '112', '122', '233', '233', '233')),
        (-72, ('111', '112', '123', '222', '233', '333')),
        (144, ('111', '112', '123', '223', '223', '333')),
        (-72, ('111', '112', '123', '223', '233', '233')),
        (-36, ('111', '112', '133', '222', '223', '333')),
        (72, ('111', '112', '133', '222', '233', '233')),
        (-36, ('111', '112', '133', '223', '223', '233')),
        (-36, ('111', '113', '122', '222', '233', '333')),
        (72, ('111', '113', '122', '223', '223', '333')),
        (-36, ('111', '113', '122', '223', '233', '233')),
        (-72, ('111', '113', '123', '222', '223', '333')),
        (144, ('111', '113', '123', '222', '233', '233')),
        (-72, ('111', '113', '123', '223', '223', '233')),
        (36, ('111', '113', '133', '222', '222', '333')),
        (-108, ('111', '113', '133', '222', '223', '233')),
        (72, ('111', '113', '133', '223', '223', '223')),
        (-24, ('111', '122', '122', '122', '333', '333')),
        (144, ('111', '122', '122', '123', '233', '333')),
        (72, ('111', '122', '122', '133', '223', '333')),
        (-144, ('111', '122', '122', '133', '233', '233')),
        (-216, ('111', '122', '123', '123', '223', '333')),
        (-72, ('111', '122', '123', '123', '233', '233')),
        (-72, ('111', '122', '123', '133', '222', '333')),
        (360, ('111', '122', '123', '133', '223', '233')),
        (72, ('111', '122', '133', '133', '222', '233')),
        (-144, ('111', '122', '133', '133', '223', '223')),
        (120, ('111', '123', '123', '123', '222', '333')),
        (72, ('111', '123', '123', '123', '223', '233')),
        (-216, ('111', '123', '123', '133', '222', '233')),
        (-72, ('111', '123', '123', '133', '223', '223')),
        (144, ('111', '123', '133', '133', '222', '223')),
        (-24, ('111', '133', '133', '133', '222', '222')),
        (-24, ('112', '112', '112', '222', '333', '333')),
        (72, ('112', '112', '112', '223', '233', '333')),
        (-48, ('112', '112', '112', '233', '233', '233')),
        (72, ('112', '112', '113', '222', '233', '333')),
        (-144, ('112', '112', '113', '223', '223', '333')),
        (72, ('112', '112', '113', '223', '233', '233')),
        (18, ('112', '112', '122', '122', '333', '333')),
        (-72, ('112', '112', '122', '123', '233', '333')),
        (-36, ('112', '112', '122', '133', '223', '333')),
        (72, ('112', '112', '122', '133', '233', '233')),
        (-72, ('112', '112', '123', '123', '223', '333')),
        (144, ('112', '112', '123', '123', '233', '233')),
        (144, ('112', '112', '123', '133', '222', '333')),
        (-216, ('112', '112', '123', '133', '223', '233')),
        (-144, ('112', '112', '133', '133', '222', '233')),
        (162, ('112', '112', '133', '133', '223', '223')),
        (72, ('112', '113', '113', '222', '223', '333')),
        (-144, ('112', '113', '113', '222', '233', '233')),
        (72, ('112', '113', '113', '223', '223', '233')),
        (-36, ('112', '113', '122', '122', '233', '333')),
        (360, ('112', '113', '122', '123', '223', '333')),
        (-216, ('112', '113', '122', '123', '233', '233')),
        (-108, ('112', '113', '122', '133', '222', '333')),
        (36, ('112', '113', '122', '133', '223', '233')),
        (-216, ('112', '113', '123', '123', '222', '333')),
        (72, ('112', '113', '123', '123', '223', '233')),
        (360, ('112', '113', '123', '133', '222', '233')),
        (-216, ('112', '113', '123', '133', '223', '223')),
        (-36, ('112', '113', '133', '133', '222', '223')),
        (-72, ('112', '122', '122', '123', '133', '333')),
        (72, ('112', '122', '122', '133', '133', '233')),
        (72, ('112', '122', '123', '123', '123', '333')),
        (72, ('112', '122', '123', '123', '133', '233')),
        (-216, ('112', '122', '123', '133', '133', '223')),
        (72, ('112', '122', '133', '133', '133', '222')),
        (-144, ('112', '123', '123', '123', '123', '233')),
        (216, ('112', '123', '123', '123', '133', '223')),
        (-72, ('112', '123', '123', '133', '133', '222')),
        (-24, ('113', '113', '113', '222', '222', '333')),
        (72, ('113', '113', '113', '222', '223', '233')),
        (-48, ('113', '113', '113', '223', '223', '223')),
        (-144, ('113', '113', '122', '122', '223', '333')),
        (162, ('113', '113', '122', '122', '233', '233')),
        (144, ('113', '113', '122', '123', '222', '333')),
        (-216, ('113', '113', '122', '123', '223', '233')),
        (-36, ('113', '113', '122', '133', '222', '233')),
        (72, ('113', '113', '122', '133', '223', '223')),
        (-72, ('113', '113', '123', '123', '222', '233')),
        (144, ('113', '113', '123', '123', '223', '223')),
        (-72, ('113', '113', '123', '133', '222', '223')),
        (18, ('113', '113', '133', '133', '222', '222')),
        (72, ('113', '122', '122', '122', '133', '333')),
        (-72, ('113', '122', '122', '123', '123', '333')),
        (-216, ('113', '122', '122', '123', '133', '233')),
        (72, ('113', '122', '122', '133', '133', '223')),
        (216, ('113', '122', '123', '123', '123', '233')),
        (72, ('113', '122', '123', '123', '133', '223')),
        (-72, ('113', '122', '123', '133', '133', '222')),
        (-144, ('113', '123', '123', '123', '123', '223')),
        (72, ('113', '123', '123', '123', '133', '222')),
        (-48, ('122', '122', '122', '133', '133', '133')),
        (144, ('122', '122', '123', '123', '133', '133')),
        (-144, ('122', '123', '123', '123', '123', '133')),
        (48, ('123', '123', '123', '123', '123', '123')),
    ),
}

INVARIANT_TAGS = tuple(_CONTRACTIONS)


def _check_shape(p: HomPoly, tag: str):
    if tag not in _CONTRACTIONS:
        raise ShapeError(f"unknown invariant tag {tag!r}")
    n, r = _CONTRACTIONS[tag][0], _CONTRACTIONS[tag][1]
    if (p.n, p.degree) != (n, r):
        raise ShapeError(f"{tag} expects a {n}|{r} form, got {p.n}|{p.degree}")


def invariant(p: HomPoly, tag: str) -> Fraction:
    """Evaluate the stored polynomial-in-tensor-entries expansion."""
    _check_shape(p, tag)
    cache: dict = {}

    def entry(idx: str) -> Fraction:
        v = cache.get(idx)
        if v is None:
            v = tensor_coeff(p, tuple(int(ch) for ch in idx))
            cache[idx] = v
        return v

    total = Fraction(0)
    for c, mono in _EXPANSIONS[tag]:
        term = Fraction(c)
        for idx in mono:
            term *= entry(idx)
            if term == 0:
                break
        total += term
    return total


def _perm_sign(perm) -> int:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
              if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def invariant_contraction(p: HomPoly, tag: str) -> Fraction:
    """Independent oracle: evaluate the defining epsilon contraction by
    brute-force summation over the nonzero epsilon assignments."""
    _check_shape(p, tag)
    n, r, slots, eps, prefactor = _CONTRACTIONS[tag]
    perms = [(perm, _perm_sign(perm))
             for perm in itertools.permutations(range(1, n + 1))]
    tcache: dict = {}

    def entry(idx: tuple) -> Fraction:
        v = tcache.get(idx)
        if v is None:
            v = tensor_coeff(p, idx)
            tcache[idx] = v
        return v

    total = Fraction(0)
    for combo in itertools.product(perms, repeat=len(eps)):
        sign = 1
        assign = {}
        for labels, (perm, s) in zip(eps, combo):
            sign *= s
            for lab, val in zip(labels, perm):
                assign[lab] = val
        term = Fraction(sign)
        for slot in slots:
            idx = tuple(sorted(assign[f"{slot}{t}"] for t in range(1, r + 1)))
            term *= entry(idx)
            if term == 0:
                break
        total += term
    return prefactor * total


def discriminant_via_invariants(p: HomPoly) -> Fraction:
    """Closed invariant combinations: I4 for the binary cubic,
    I2^3 - 6 I3^2 for the binary quartic, 32 I4^3 + 3 I6^2 for the ternary
    cubic.  Proportional to (not equal to) the gradient-route value; the
    ratio is one fixed constant per shape."""
    shape = (p.n, p.degree)
    if shape == (2, 3):
        return invariant(p, "I4@2|3")
    if shape == (2, 4):
        return invariant(p, "I2@2|4") ** 3 - 6 * invariant(p, "I3@2|4") ** 2
    if shape == (3, 3):
        return 32 * invariant(p, "I4@3|3") ** 3 + 3 * invariant(p, "I6@3|3") ** 2
    raise ShapeError(f"no invariant discriminant formula for shape {shape[0]}|{shape[1]}")


# ---------------------------------------------------------------------------
# Symmetric forms


@dataclass(frozen=True)
class SymmetricForm:
    """sum_Y C_Y p_Y over partitions Y of r, with p_k the power sums."""

    n: int
    r: int
    C: Mapping[tuple, Fraction]

    def __post_init__(self):
        for part in self.C:
            if (sorted(part, reverse=True) != list(part) or sum(part) != self.r
                    or any(v < 1 for v in part)):
                raise ShapeError(f"{part} is not a partition of {self.r}")

    def expand(self) -> HomPoly:
        """The underlying homogeneous polynomial in monomial form."""
        power_sum = {}
        out = zero_poly(self.n, self.r)
        for part, coeff in self.C.items():
            term = HomPoly(self.n, 0, {(0,) * self.n: Fraction(coeff)})
            for k in part:
                pk = power_sum.get(k)
                if pk is None:
                    pk = HomPoly(self.n, k,
                                 {tuple(k if j == i else 0 for j in range(self.n)): Fraction(1)
                                  for i in range(self.n)})
                    power_sum[k] = pk
                term = term * pk
            out = out + term
        return out


def symmetric_disc(sf: SymmetricForm) -> Fraction:
    """Closed factorized discriminants of symmetric forms of degree 2
    and 3 (any number of variables)."""
    n = sf.n
    if sf.r == 2:
        c2 = sf.C.get((2,), Fraction(0))
        c11 = sf.C.get((1, 1), Fraction(0))
        return c2 ** (n - 1) * (c2 + n * c11)
    if sf.r == 3:
        c3 = sf.C.get((3,), Fraction(0))
        c21 = sf.C.get((2, 1), Fraction(0))
        c111 = sf.C.get((1, 1, 1), Fraction(0))
        b1 = n * n * c111 + n * c21 + c3
        b2 = n * c21 + 3 * c3
        b3 = c3
        # Relative weight 27*(n-2k)^2 : 4*k*(n-k) inside each factor is
        # pinned by gradient-resultant data (the per-factor constants only
        # move the absorbed per-shape normalization).
        total = Fraction(b3) ** ((n - 3) * 2 ** (n - 1))
        for k in range(n):
            factor = (27 * Fraction(n - 2 * k) ** 2 * b1 * b3 * b3
                      + 4 * k * (n - k) * b2 ** 3)
            total *= factor ** comb(n - 1, k)
        return total
    raise RangeError(f"closed symmetric discriminant implemented for degree 2 and 3, not {sf.r}")


def partition_count(r: int) -> int:
    """Number of partitions of r, by expanding prod 1/(1 - q^k)."""
    if r < 0:
        raise RangeError("negative degree")
    dp = [1] + [0] * r
    for part in range(1, r + 1):
        for s in range(part, r + 1):
            dp[s] += dp[s - part]
    return dp[r]


def partitions_of(r: int):
    """Partitions of r as non-increasing tuples."""
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(r, r)
