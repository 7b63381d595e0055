"""Method-against-method validation: every pipeline must produce the same
calibrated rational on every system it applies to.

Also hosts the method dispatcher used by the CLI and the discriminant
module, plus seeded random-system and constructed-singular-system
generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import bezout, hybrid, koszul, schurtrace, sylvester
from .errors import DegenerateError, PolyElimError, ShapeError
from .polyring import (HomPoly, PolySystem, evaluate, make_poly, make_system,
                       monomials)

METHODS = ("sylvester", "koszul", "bezout", "pfaffian", "hybrid", "trace")


def applicable_methods(sys: PolySystem) -> tuple:
    """Methods defined for the system's shape, in canonical order."""
    out = []
    degrees = sys.degrees
    equal = len(set(degrees)) == 1
    r = degrees[0] if equal else None
    if sys.n == 2:
        out.append("sylvester")
    if equal and sys.n >= 2:
        out.append("koszul")
    if equal and sys.n == 2 and r in (1, 2, 3):
        out.append("bezout")
    if equal and (sys.n, r) == (3, 2):
        out.append("pfaffian")
    if equal and (sys.n == 3 and r >= 2 or (sys.n, r) == (4, 2)):
        out.append("hybrid")
    out.append("trace")
    return tuple(out)


def resultant(sys: PolySystem, method: str = "auto", variant: str = "b") -> Fraction:
    """Canonical calibrated resultant via the chosen pipeline.  "auto"
    picks sylvester for two variables, the hybrid determinant where one
    exists, and the Koszul complex otherwise."""
    if method == "auto":
        if sys.n == 2:
            method = "sylvester"
        elif sys.n == 3 or (sys.n == 4 and set(sys.degrees) == {2}):
            method = "hybrid"
        else:
            method = "koszul"
    if method == "sylvester":
        if sys.n != 2:
            raise ShapeError("sylvester method needs two variables")
        return sylvester.resultant_2(*sys.polys)
    if method == "koszul":
        return koszul.resultant_koszul(sys)
    if method == "bezout":
        return bezout.resultant_bezout(sys)
    if method == "pfaffian":
        return bezout.resultant_pfaffian_32(sys)
    if method == "hybrid":
        return hybrid.resultant_hybrid(sys, variant)
    if method == "trace":
        return schurtrace.resultant_trace(sys)
    raise ShapeError(f"unknown method {method!r}")


@dataclass
class CrossReport:
    values: dict = field(default_factory=dict)   # method -> Fraction
    errors: dict = field(default_factory=dict)   # method -> str

    @property
    def agreed(self) -> bool:
        return not self.errors and len(set(self.values.values())) <= 1

    def summary(self) -> str:
        lines = [f"  {m}: {v}" for m, v in self.values.items()]
        lines += [f"  {m}: ERROR {e}" for m, e in self.errors.items()]
        lines.append("  agreement: " + ("exact" if self.agreed else "MISMATCH"))
        return "\n".join(lines)


def cross_validate(sys: PolySystem, methods=None) -> CrossReport:
    """Run every requested pipeline and compare the calibrated values."""
    if methods is None:
        methods = applicable_methods(sys)
    report = CrossReport()
    for m in methods:
        try:
            report.values[m] = resultant(sys, m)
        except PolyElimError as exc:
            report.errors[m] = f"{type(exc).__name__}: {exc}"
    return report


# ---------------------------------------------------------------------------
# System generators


def random_system(n: int, degrees, rng: random.Random, lo: int = -9, hi: int = 9) -> PolySystem:
    polys = []
    for r in degrees:
        entries = [(e, rng.randint(lo, hi)) for e in monomials(n, r)]
        polys.append(make_poly(n, r, entries))
    return make_system(polys)


def singular_system(n: int, r: int, root, rng: random.Random | None = None) -> PolySystem:
    """Random degree-r forms adjusted to share the given nonzero root, so
    the resultant is exactly zero."""
    root = [Fraction(v) for v in root]
    if all(v == 0 for v in root):
        raise ShapeError("root must be nonzero")
    rng = rng or random.Random(0)
    pivot = next(i for i, v in enumerate(root) if v != 0)
    mono = tuple(r if j == pivot else 0 for j in range(n))
    polys = []
    for _ in range(n):
        q = make_poly(n, r, [(e, rng.randint(-9, 9)) for e in monomials(n, r)])
        val = evaluate(q, root)
        corr = val / root[pivot] ** r
        q = q - make_poly(n, r, [(mono, corr)])
        polys.append(q)
    return make_system(polys)


def sample_and_check(n: int, r: int, count: int, seed: int, methods=None):
    """Draw `count` random integer systems, re-sampling on degenerate
    pivots, and cross-validate each.  Returns (reports, resampled)."""
    rng = random.Random(seed)
    reports = []
    resampled = 0
    while len(reports) < count:
        sys = random_system(n, [r] * n, rng)
        try:
            report = cross_validate(sys, methods)
        except DegenerateError:
            resampled += 1
            continue
        if any("DegenerateError" in e for e in report.errors.values()):
            resampled += 1
            continue
        reports.append(report)
    return reports, resampled
