"""Partition-function series: integral-discriminant branches, bounded
area/volume identities, algebraic-root series, and Ward-identity checks.

Everything with rational coefficients (the quartic area series, the root
series, Ward residuals) is exact; high-precision floats enter only where
Gamma-function constants do (branch weights of the regular combination),
at a configurable number of digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

import mpmath

from .discrim import invariant
from .errors import DegreeError, DomainError, PoleError
from .polyring import make_poly

DEFAULT_DIGITS = 50


@dataclass(frozen=True)
class UniSeries:
    """Truncated univariate series; coeffs[k] multiplies var**k."""

    var: str
    order: int
    coeffs: tuple
    exact: bool = True

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise DegreeError(f"{len(self.coeffs)} coefficients for order {self.order}")

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def evaluate(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total


@dataclass(frozen=True)
class MultiSeries:
    """Truncated multivariate series; exponents may be negative (Laurent
    monomials in the marked variables), bounded per variable."""

    vars: tuple
    bounds: tuple          # (lo, hi) per variable
    coeffs: Mapping[tuple, Fraction]

    def __post_init__(self):
        for e in self.coeffs:
            if len(e) != len(self.vars):
                raise DegreeError(f"exponent {e} does not match variables {self.vars}")
            for v, (lo, hi) in zip(e, self.bounds):
                if not lo <= v <= hi:
                    raise DegreeError(f"exponent {e} outside bounds {self.bounds}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs.values())

    def partial(self, i: int) -> "MultiSeries":
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[e2] = out.get(e2, Fraction(0)) + e[i] * c
        lo, hi = self.bounds[i]
        bounds = self.bounds[:i] + ((lo - 1, hi),) + self.bounds[i + 1:]
        return MultiSeries(self.vars, bounds, out)

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        bounds = tuple((min(a, c), max(b, d))
                       for (a, b), (c, d) in zip(self.bounds, other.bounds))
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return MultiSeries(self.vars, bounds, {e: c for e, c in out.items() if c != 0})


# ---------------------------------------------------------------------------
# Hypergeometric and area series


def pochhammer(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def pochhammer_2f1(a, b, c, order: int) -> UniSeries:
    """Truncated Gauss series with exact rational coefficients
    (a)_k (b)_k / ((c)_k k!)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and -order < c <= 0:
        raise PoleError(f"lower parameter {c} hits a pole within order {order}")
    coeffs = []
    term = Fraction(1)
    for k in range(order + 1):
        coeffs.append(term)
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1))
    return UniSeries("z", order, tuple(coeffs))


def area_series_quartic(order: int) -> UniSeries:
    """Coefficients of V(eps)/pi for the curve (x^2+y^2)^2 + eps x^2 y^2 = 1.

    The angular integrand (1 + eps sin^2(2phi)/4)^(-1/2) is expanded
    binomially and integrated term by term with the Wallis values
    mean(sin^(2k)) = C(2k,k)/4^k, giving exact rationals."""
    if order < 0:
        raise DegreeError("order must be nonnegative")
    coeffs = []
    binom = Fraction(1)          # binom(-1/2, k)
    for k in range(order + 1):
        wallis = Fraction(comb(2 * k, k), 4 ** k)
        coeffs.append(binom * Fraction(1, 4 ** k) * wallis)
        binom = binom * (Fraction(-1, 2) - k) / (k + 1)
    return UniSeries("eps", order, tuple(coeffs))


def quartic_invariants(eps) -> tuple:
    """I2, I3 of (x^2+y^2)^2 + eps x^2 y^2, exactly."""
    eps = Fraction(eps)
    p = make_poly(2, 4, [((4, 0), 1), ((2, 2), 2 + eps), ((0, 4), 1)])
    return invariant(p, "I2@2|4"), invariant(p, "I3@2|4")


def _hyp2f1_mp(a, b, c, z, order: int):
    term = mpmath.mpf(1)
    total = mpmath.mpf(1)
    z = mpmath.mpf(z.numerator) / z.denominator if isinstance(z, Fraction) else mpmath.mpf(z)
    for k in range(order):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def j24_regular_branch(eps, order: int, digits: int = DEFAULT_DIGITS):
    """The branch combination of the quartic integral discriminant that
    stays regular as eps -> 0, evaluated at high precision.

    Both branches are hypergeometric in z = 6 I3^2 / I2^3; the regular
    combination weighs them with Gamma-constant factors.  Requires |z| < 1
    (the series boundary); `order` is the summation length and must be
    taken large when z is close to 1."""
    i2, i3 = quartic_invariants(eps)
    z = 6 * i3 * i3 / i2 ** 3
    if not abs(z) < 1:
        raise DomainError(f"series argument {float(z):.6f} outside (-1, 1)")
    if i2 <= 0:
        raise DomainError("negative quartic invariant; fractional powers undefined")
    with mpmath.workdps(digits):
        i2f = mpmath.mpf(i2.numerator) / i2.denominator
        i3f = mpmath.mpf(i3.numerator) / i3.denominator
        f1 = _hyp2f1_mp(mpmath.mpf(1) / 12, mpmath.mpf(5) / 12, mpmath.mpf(1) / 2, z, order)
        f2 = _hyp2f1_mp(mpmath.mpf(7) / 12, mpmath.mpf(11) / 12, mpmath.mpf(3) / 2, z, order)
        j1 = i2f ** (mpmath.mpf(-1) / 4) * f1
        j2 = i3f * i2f ** (mpmath.mpf(-7) / 4) * f2
        w1 = 6 ** (mpmath.mpf(-1) / 4) * mpmath.gamma(mpmath.mpf(3) / 2) / (
            mpmath.gamma(mpmath.mpf(7) / 12) * mpmath.gamma(mpmath.mpf(11) / 12))
        w2 = 6 ** (mpmath.mpf(1) / 4) * mpmath.gamma(mpmath.mpf(1) / 2) / (
            mpmath.gamma(mpmath.mpf(1) / 12) * mpmath.gamma(mpmath.mpf(5) / 12))
        return w1 * j1 - w2 * j2


# ---------------------------------------------------------------------------
# The four-dimensional bounded volume


def volume_4d(a, b, c, hbar=1):
    """Closed form pi^2/sqrt(a) * hbar/sqrt(b + 2 sqrt(a c)) of the volume
    bounded by a(x1^2+x2^2+x3^2)^2 + b(x1^2+x2^2+x3^2)x4^2 + c x4^4 = hbar.
    Returns (value, closed_form_flag)."""
    a, b, c, hbar = (Fraction(v) for v in (a, b, c, hbar))
    if a <= 0 or b <= 0 or c <= 0 or hbar <= 0:
        raise DomainError("volume formula needs positive coefficients")
    af = mpmath.mpf(a.numerator) / a.denominator
    bf = mpmath.mpf(b.numerator) / b.denominator
    cf = mpmath.mpf(c.numerator) / c.denominator
    hf = mpmath.mpf(hbar.numerator) / hbar.denominator
    value = mpmath.pi ** 2 / mpmath.sqrt(af) * hf / mpmath.sqrt(bf + 2 * mpmath.sqrt(af * cf))
    return value, True


def volume_4d_quadrature(a, b, c, hbar=1) -> float:
    """Companion oracle: the radial/axial double integral
    4 pi * int rho^2 drho int dt exp(-(a rho^4 + b rho^2 t^2 + c t^4)/hbar),
    evaluated adaptively on a truncated domain.

    Truncation budget: the cut radii satisfy a R^4/hbar = c T^4/hbar = 50,
    so each discarded tail is bounded by exp(-50) times a convergent
    Gaussian-type factor, far below the 1e-6 relative tolerance the tests
    allow."""
    from scipy import integrate
    import math
    a, b, c, hbar = float(a), float(b), float(c), float(hbar)
    if min(a, b, c, hbar) <= 0:
        raise DomainError("quadrature oracle needs positive coefficients")
    rmax = (50.0 * hbar / a) ** 0.25
    tmax = (50.0 * hbar / c) ** 0.25

    def integrand(t, rho):
        return rho * rho * math.exp(-(a * rho ** 4 + b * rho ** 2 * t * t + c * t ** 4) / hbar)

    val, _ = integrate.dblquad(integrand, 0.0, rmax, -tmax, tmax,
                               epsabs=1e-12, epsrel=1e-10)
    return 4.0 * math.pi * val


# ---------------------------------------------------------------------------
# Root series and Ward identities


def _poly_mul_trunc(p: list, q: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if i + j > order:
                break
            out[i + j] += a * b
    return out


def root_series_fixed_point(r: int, order: int) -> UniSeries:
    """Small-root branch of x^r + x + c = 0 as a series in c, by iterating
    x <- -(c + x^r) on truncated series.  The magnitude of the coefficient
    of c^((r-1)k+1) is (rk)! / (k! ((r-1)k+1)!)."""
    if r < 2:
        raise DegreeError("equation degree must be at least 2")
    if order < 1:
        raise DegreeError("order must be at least 1")
    x = [Fraction(0)] * (order + 1)
    for _ in range(order):
        xr = [Fraction(1)] + [Fraction(0)] * order
        for _ in range(r):
            xr = _poly_mul_trunc(xr, x, order)
        new = [-v for v in xr]
        new[1] -= 1
        if new == x:
            break
        x = new
    return UniSeries("c", order, tuple(x))


def root_coefficient_law(r: int, k: int) -> Fraction:
    """(rk)! / (k! ((r-1)k+1)!), the tree-counting magnitude law."""
    from math import factorial
    return Fraction(factorial(r * k), factorial(k) * factorial((r - 1) * k + 1))


def catalan_branch_series(order: int, perturb=None) -> MultiSeries:
    """The small root of f0 + f1 x + f2 x^2 = 0 reconstructed as a Laurent
    series in (f0, f1, f2): sum_k -Cat_k f0^(k+1) f1^(-2k-1) f2^k,
    truncated at k <= order.  `perturb` = (k, delta) shifts one
    coefficient (used as a sensitivity control in tests)."""
    coeffs = {}
    for k in range(order + 1):
        cat = Fraction(comb(2 * k, k), k + 1)
        coeffs[(k + 1, -2 * k - 1, k)] = -cat
    if perturb is not None:
        k, delta = perturb
        key = (k + 1, -2 * k - 1, k)
        coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(delta)
    bounds = ((0, order + 1), (-2 * order - 1, 1), (-1, order))
    return MultiSeries(("f0", "f1", "f2"), bounds, coeffs)


def ward_residual_quadratic(order: int, branch: int = 1, perturb=None) -> MultiSeries:
    """Residual of the quadratic-root Ward identity
    (d/df0 d/df2 - d/df1 d/df1) applied to the truncated root series;
    identically zero through the truncation window.

    Terms whose f0-exponent exceeds `order` are outside the window (they
    would need the next, untruncated series coefficient) and are dropped.
    branch=2 checks the companion root -f1/f2 - (branch-1 series)."""
    if order < 2:
        raise DegreeError("need order at least 2")
    lam = catalan_branch_series(order, perturb)
    if branch == 2:
        coeffs = {e: -c for e, c in lam.coeffs.items()}
        coeffs[(0, 1, -1)] = Fraction(-1)
        bounds = (lam.bounds[0], (lam.bounds[1][0], 1), (-1, lam.bounds[2][1]))
        lam = MultiSeries(lam.vars, bounds, coeffs)
    elif branch != 1:
        raise DomainError(f"branch must be 1 or 2, got {branch}")
    residual = lam.partial(0).partial(2) - lam.partial(1).partial(1)
    trimmed = {e: c for e, c in residual.coeffs.items() if e[0] <= order}
    return MultiSeries(residual.vars, residual.bounds, trimmed)
