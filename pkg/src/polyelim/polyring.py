"""Exact homogeneous multivariate polynomials and polynomial systems.

A polynomial is a map from exponent tuples to rational coefficients.  Two
coefficient conventions coexist: the stored one is monomial form (s_a for
the monomial x^a), and symmetric-tensor entries are derived on demand via
the multinomial convention s_a = multinomial(r; a) * S_{i_1..i_r}.

All basis enumerations anywhere in the package use graded lexicographic
order with x_1 > x_2 > ... > x_n; matrix layouts downstream depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DegreeError, DimensionError, HomogeneityError

Exponent = tuple  # tuple[int, ...], one entry per variable
Rational = Fraction

_HASH_FIELD = "_hash"


def monomials(n: int, d: int) -> Iterator[Exponent]:
    """Yield all exponent tuples of degree d in n variables, graded-lex
    (largest x_1 power first)."""
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            yield (a,) + rest


def monomial_index(n: int, d: int) -> dict:
    """Map each degree-d exponent tuple to its graded-lex position (0-based)."""
    return {e: i for i, e in enumerate(monomials(n, d))}


def monomial_count(n: int, d: int) -> int:
    return comb(d + n - 1, d)


@dataclass(frozen=True, eq=True)
class HomPoly:
    """Homogeneous polynomial of fixed degree with exact rational coefficients.

    The zero polynomial keeps its degree tag (empty coefficient map), so
    differentiation and restriction always return a typed result.
    Instances are immutable; all operations return new values.
    """

    n: int
    degree: int
    coeffs: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"need at least one variable, got n={self.n}")
        if self.degree < 0:
            raise DegreeError(f"negative degree {self.degree}")

    def __hash__(self):
        h = self.__dict__.get(_HASH_FIELD)
        if h is None:
            h = hash((self.n, self.degree, frozenset(self.coeffs.items())))
            object.__setattr__(self, _HASH_FIELD, h)
        return h

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return (self.n, self.degree) == (other.n, other.degree) and dict(self.coeffs) == dict(other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if self.n != other.n:
            raise DimensionError("adding polynomials in different variable counts")
        if self.coeffs and other.coeffs and self.degree != other.degree:
            raise DegreeError("adding polynomials of different degrees")
        deg = self.degree if self.coeffs or not other.coeffs else other.degree
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return HomPoly(self.n, deg, {e: c for e, c in out.items() if c != 0})

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.n, self.degree, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coeffs:
            return f"HomPoly({self.n}|{self.degree}: 0)"
        terms = ", ".join(f"{e}:{c}" for e, c in sorted(self.coeffs.items(), reverse=True))
        return f"HomPoly({self.n}|{self.degree}: {terms})"


def make_poly(n: int, r: int, entries: Iterable[tuple]) -> HomPoly:
    """Build a normalized degree-r polynomial from (exponent, coefficient)
    pairs: duplicates are summed, zero coefficients dropped.

    Raises DimensionError on exponent length mismatch and HomogeneityError
    if any exponent has degree != r.
    """
    coeffs: dict = {}
    for exp, c in entries:
        exp = tuple(int(a) for a in exp)
        if len(exp) != n:
            raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {n}")
        if any(a < 0 for a in exp):
            raise HomogeneityError(f"negative exponent in {exp}")
        if sum(exp) != r:
            raise HomogeneityError(f"monomial {exp} has degree {sum(exp)}, expected {r}")
        c = Fraction(c)
        if c == 0:
            continue
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + c
    return HomPoly(n, r, {e: c for e, c in coeffs.items() if c != 0})


def zero_poly(n: int, r: int) -> HomPoly:
    return HomPoly(n, r, {})


def variable(n: int, i: int, r: int = 1) -> HomPoly:
    """x_i^r as a polynomial in n variables (i is 1-based)."""
    exp = tuple(r if j == i - 1 else 0 for j in range(n))
    return HomPoly(n, r, {exp: Fraction(1)})


def tensor_coeff(p: HomPoly, idx: Sequence[int]) -> Fraction:
    """Symmetric tensor entry S_{i_1..i_r}; indices are 1-based and len(idx)
    must equal the degree."""
    if len(idx) != p.degree:
        raise IndexError(f"index tuple of length {len(idx)}, degree is {p.degree}")
    counts = [0] * p.n
    for i in idx:
        if not 1 <= i <= p.n:
            raise IndexError(f"variable index {i} out of range 1..{p.n}")
        counts[i - 1] += 1
    exp = tuple(counts)
    s = p.coeffs.get(exp)
    if s is None:
        return Fraction(0)
    multinom = factorial(p.degree)
    for a in exp:
        multinom //= factorial(a)
    return s / multinom


def partial(p: HomPoly, i: int) -> HomPoly:
    """d/dx_i (i is 1-based); result is homogeneous of degree r-1."""
    if not 1 <= i <= p.n:
        raise DimensionError(f"variable index {i} out of range 1..{p.n}")
    if p.degree < 1:
        raise DegreeError("cannot differentiate a degree-0 polynomial")
    out = {}
    j = i - 1
    for e, c in p.coeffs.items():
        a = e[j]
        if a == 0:
            continue
        e2 = e[:j] + (a - 1,) + e[j + 1:]
        out[e2] = out.get(e2, Fraction(0)) + a * c
    return HomPoly(p.n, p.degree - 1, {e: c for e, c in out.items() if c != 0})


def mul(p: HomPoly, q: HomPoly) -> HomPoly:
    if p.n != q.n:
        raise DimensionError("multiplying polynomials in different variable counts")
    out: dict = {}
    for e1, c1 in p.coeffs.items():
        for e2, c2 in q.coeffs.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return HomPoly(p.n, p.degree + q.degree, {e: c for e, c in out.items() if c != 0})


def scale(p: HomPoly, lam) -> HomPoly:
    lam = Fraction(lam)
    if lam == 0:
        return zero_poly(p.n, p.degree)
    return HomPoly(p.n, p.degree, {e: lam * c for e, c in p.coeffs.items()})


def evaluate(p: HomPoly, point: Sequence) -> Fraction:
    if len(point) != p.n:
        raise DimensionError(f"point of length {len(point)}, expected {p.n}")
    vals = [Fraction(v) for v in point]
    total = Fraction(0)
    for e, c in p.coeffs.items():
        term = c
        for a, v in zip(e, vals):
            if a:
                term *= v ** a
        total += term
    return total


def power(p: HomPoly, k: int) -> HomPoly:
    """p**k by iterated multiplication, memoized per polynomial."""
    if k < 0:
        raise DegreeError("negative power")
    cache = _power_cache.setdefault(p, {0: HomPoly(p.n, 0, {(0,) * p.n: Fraction(1)})})
    top = max(cache)
    while top < k:
        cache[top + 1] = mul(cache[top], p)
        top += 1
    return cache[k]


_power_cache: dict = {}


def power_coeff(p: HomPoly, k: int, j: Exponent) -> Fraction:
    """Coefficient of x^j in p**k.  |j| must equal k * degree."""
    j = tuple(j)
    if len(j) != p.n:
        raise DimensionError(f"exponent of length {len(j)}, expected {p.n}")
    if sum(j) != k * p.degree:
        raise DegreeError(f"|j|={sum(j)} but p^{k} is homogeneous of degree {k * p.degree}")
    return power(p, k).coeffs.get(j, Fraction(0))


def substitute_linear(p: HomPoly, g: Sequence[Sequence]) -> HomPoly:
    """Compose with the linear substitution x_i -> sum_j g[i][j] x_j."""
    rows = [[Fraction(v) for v in row] for row in g]
    if len(rows) != p.n or any(len(r) != p.n for r in rows):
        raise DimensionError("substitution matrix must be n x n")
    images = [HomPoly(p.n, 1, {tuple(1 if t == j else 0 for t in range(p.n)): rows[i][j]
                               for j in range(p.n) if rows[i][j] != 0})
              for i in range(p.n)]
    out = zero_poly(p.n, p.degree)
    for e, c in p.coeffs.items():
        term = HomPoly(p.n, 0, {(0,) * p.n: c})
        for i, a in enumerate(e):
            for _ in range(a):
                term = mul(term, images[i])
        out = out + term
    return out


def restrict_zero(p: HomPoly, i: int) -> HomPoly:
    """Set x_i = 0 (1-based) and drop the variable; result has n-1 variables."""
    if p.n < 2:
        raise DimensionError("cannot drop the only variable")
    j = i - 1
    out = {}
    for e, c in p.coeffs.items():
        if e[j] == 0:
            out[e[:j] + e[j + 1:]] = c
    return HomPoly(p.n - 1, p.degree, out)


# ---------------------------------------------------------------------------
# Systems


@dataclass(frozen=True)
class PolySystem:
    """n homogeneous polynomials in n variables, with the degree data the
    resultant theory attaches to them: d_i = (prod r_j) / r_i and d = sum d_i."""

    n: int
    polys: tuple

    def __post_init__(self):
        if len(self.polys) != self.n:
            raise DimensionError(f"{len(self.polys)} polynomials for {self.n} variables")
        for p in self.polys:
            if p.n != self.n:
                raise DimensionError("system polynomial has wrong variable count")
        object.__setattr__(self, "polys", tuple(self.polys))

    @property
    def degrees(self) -> tuple:
        return tuple(p.degree for p in self.polys)

    @property
    def partial_degrees(self) -> tuple:
        total = prod(self.degrees)
        return tuple(total // r for r in self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.partial_degrees)

    def equal_degree(self) -> int:
        rs = set(self.degrees)
        if len(rs) != 1:
            raise DegreeError(f"system has mixed degrees {self.degrees}")
        return rs.pop()

    def scale_poly(self, i: int, lam) -> "PolySystem":
        """Replace f_i (1-based) by lam * f_i."""
        polys = list(self.polys)
        polys[i - 1] = scale(polys[i - 1], lam)
        return PolySystem(self.n, tuple(polys))


def make_system(polys: Sequence[HomPoly]) -> PolySystem:
    return PolySystem(len(polys), tuple(polys))


def reference_system(n: int, degrees: Sequence[int]) -> PolySystem:
    """The monomial system {x_1^{r_1}, ..., x_n^{r_n}} used to pin the
    resultant normalization."""
    return PolySystem(n, tuple(variable(n, i + 1, r) for i, r in enumerate(degrees)))


# ---------------------------------------------------------------------------
# Canonical JSON text form (the CLI exchange format)


def poly_to_json(p: HomPoly) -> dict:
    coeffs = {",".join(str(a) for a in e): str(c)
              for e, c in sorted(p.coeffs.items(), reverse=True)}
    return {"n": p.n, "degree": p.degree, "coeffs": coeffs}


def poly_from_json(obj: Mapping) -> HomPoly:
    try:
        n = int(obj["n"])
        r = int(obj["degree"])
        raw = obj["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise HomogeneityError(f"malformed polynomial object: {exc}") from exc
    entries = []
    for key, val in raw.items():
        exp = tuple(int(part) for part in key.split(","))
        sval = str(val)
        if "." in sval or "e" in sval or "E" in sval:
            raise HomogeneityError(f"coefficient {sval!r} is not a decimal-free rational")
        entries.append((exp, Fraction(sval)))
    return make_poly(n, r, entries)


def system_to_json(sys: PolySystem) -> dict:
    return {"n": sys.n, "polys": [poly_to_json(p) for p in sys.polys]}


def system_from_json(obj: Mapping) -> PolySystem:
    try:
        n = int(obj["n"])
        polys = obj["polys"]
    except (KeyError, TypeError, ValueError) as exc:
        raise HomogeneityError(f"malformed system object: {exc}") from exc
    return PolySystem(n, tuple(poly_from_json(p) for p in polys))
