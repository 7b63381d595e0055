"""Command-line surface: parse exact-rational system files, dispatch the
elimination pipelines, emit exact results, and benchmark.

Exit codes: 0 success (and exact agreement for crosscheck), 1 crosscheck
mismatch, 2 parse error, 3 shape/method mismatch, 4 degenerate pivot
exhaustion.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys as _sys
import time
from fractions import Fraction

import mpmath

from . import crosscheck, discrim, metrics, series
from .errors import (DegenerateError, DegreeError, DimensionError,
                     HomogeneityError, PolyElimError, RangeError, ShapeError)
from .polyring import (HomPoly, poly_from_json, system_from_json,
                       system_to_json)

PARSE_ERROR, SHAPE_ERROR, DEGENERATE_ERROR = 2, 3, 4


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise HomogeneityError(f"cannot parse {path}: {exc}") from exc


def _parse_shape(text: str) -> tuple:
    try:
        n, r = text.split("|")
        return int(n), int(r)
    except ValueError as exc:
        raise HomogeneityError(f"shape must look like 3|2, got {text!r}") from exc


def cmd_resultant(args) -> int:
    obj = _load_json(args.file)
    system = system_from_json(obj)
    if args.dump_canonical:
        print(json.dumps(system_to_json(system), indent=2))
        return 0
    value = crosscheck.resultant(system, args.method, args.variant)
    print(value)
    return 0


def cmd_discriminant(args) -> int:
    obj = _load_json(args.file)
    if args.via == "symmetric":
        try:
            n, r = int(obj["n"]), int(obj["degree"])
            coeffs = {tuple(int(p) for p in key.split(",")): Fraction(str(val))
                      for key, val in obj["C"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise HomogeneityError(f"malformed symmetric form: {exc}") from exc
        print(discrim.symmetric_disc(discrim.SymmetricForm(n, r, coeffs)))
        return 0
    form = poly_from_json(obj)
    if args.via == "invariants":
        print(discrim.discriminant_via_invariants(form))
    else:
        print(discrim.discriminant(form, args.method))
    return 0


def cmd_series(args) -> int:
    if args.kind == "area":
        out = series.area_series_quartic(args.order)
        print(json.dumps([str(c) for c in out.coeffs]))
    elif args.kind == "root":
        out = series.root_series_fixed_point(args.r, args.order)
        print(json.dumps([str(c) for c in out.coeffs]))
    elif args.kind == "2f1":
        out = series.pochhammer_2f1(Fraction(args.a), Fraction(args.b),
                                    Fraction(args.c), args.order)
        print(json.dumps([str(c) for c in out.coeffs]))
    elif args.kind == "j24":
        value = series.j24_regular_branch(Fraction(args.eps), args.order,
                                          digits=args.precision)
        print(mpmath.nstr(value, args.precision))
    elif args.kind == "volume":
        value, _ = series.volume_4d(Fraction(args.a), Fraction(args.b),
                                    Fraction(args.c), Fraction(args.hbar))
        print(mpmath.nstr(value, args.precision))
    else:
        raise ShapeError(f"unknown series kind {args.kind!r}")
    return 0


def cmd_crosscheck(args) -> int:
    n, r = _parse_shape(args.shape)
    methods = args.methods.split(",") if args.methods else None
    reports, resampled = crosscheck.sample_and_check(n, r, args.count, args.seed, methods)
    mismatches = [rep for rep in reports if not rep.agreed]
    total = len(reports)
    print(f"shape {n}|{r}: {total} systems, {resampled} resampled "
          f"(rejection rate {resampled / (total + resampled):.3f}), "
          f"{len(mismatches)} mismatches")
    for rep in mismatches:
        print(rep.summary())
    return 1 if mismatches else 0


def cmd_bench(args) -> int:
    shapes = [s for s in args.shapes.split(",") if s]
    print("shape,method,n_samples,median_ms,max_bits")
    import random
    for shape in shapes:
        n, r = _parse_shape(shape)
        lo, hi = -(2 ** args.bits - 1), 2 ** args.bits - 1
        rng = random.Random(args.seed)
        systems = [crosscheck.random_system(n, [r] * n, rng, lo, hi)
                   for _ in range(args.count)]
        sample = systems[0]
        methods = args.methods.split(",") if args.methods else crosscheck.applicable_methods(sample)
        for method in methods:
            times = []
            max_bits = 0
            try:
                for system in systems:
                    with metrics.track_bits() as tracker:
                        t0 = time.perf_counter()
                        crosscheck.resultant(system, method)
                        times.append((time.perf_counter() - t0) * 1000.0)
                    max_bits = max(max_bits, tracker.max_bits)
            except PolyElimError:
                continue
            print(f"{n}|{r},{method},{len(times)},{statistics.median(times):.3f},{max_bits}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyelim",
                                 description="Exact resultants and discriminants of homogeneous systems.")
    sub = ap.add_subparsers(dest="command", required=True)

    res = sub.add_parser("resultant", help="resultant of a system file")
    res.add_argument("file")
    res.add_argument("--method", default="auto",
                     choices=("auto",) + crosscheck.METHODS)
    res.add_argument("--variant", default="b", choices=("a", "b"))
    res.add_argument("--dump-canonical", action="store_true",
                     help="re-emit the parsed system in canonical JSON form")
    res.set_defaults(fn=cmd_resultant)

    dis = sub.add_parser("discriminant", help="discriminant of a single form")
    dis.add_argument("file")
    dis.add_argument("--via", default="gradient",
                     choices=("gradient", "invariants", "symmetric"))
    dis.add_argument("--method", default="auto",
                     choices=("auto",) + crosscheck.METHODS)
    dis.set_defaults(fn=cmd_discriminant)

    ser = sub.add_parser("series", help="series objects as JSON rational arrays")
    ser.add_argument("kind", choices=("area", "root", "2f1", "j24", "volume"))
    ser.add_argument("--order", type=int, default=10)
    ser.add_argument("--r", type=int, default=2, help="equation degree for root series")
    ser.add_argument("--a", default="1")
    ser.add_argument("--b", default="1")
    ser.add_argument("--c", default="1")
    ser.add_argument("--hbar", default="1")
    ser.add_argument("--eps", default="1/4")
    ser.add_argument("--precision", type=int, default=series.DEFAULT_DIGITS,
                     help="working digits where Gamma constants enter")
    ser.set_defaults(fn=cmd_series)

    crs = sub.add_parser("crosscheck", help="cross-validate pipelines on random systems")
    crs.add_argument("--shape", required=True, help="like 3|2")
    crs.add_argument("--count", type=int, default=20)
    crs.add_argument("--seed", type=int, default=0)
    crs.add_argument("--methods", default="",
                     help="comma-separated subset (default: all applicable)")
    crs.set_defaults(fn=cmd_crosscheck)

    ben = sub.add_parser("bench", help="wall time and intermediate bit growth per method")
    ben.add_argument("--shapes", default="", help="comma-separated, like 3|2,2|3")
    ben.add_argument("--count", type=int, default=10)
    ben.add_argument("--bits", type=int, default=4)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--methods", default="")
    ben.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (HomogeneityError, DimensionError) as exc:
        print(f"parse error: {exc}", file=_sys.stderr)
        return PARSE_ERROR
    except (ShapeError, DegreeError, RangeError) as exc:
        print(f"shape/method error: {exc}", file=_sys.stderr)
        return SHAPE_ERROR
    except DegenerateError as exc:
        print(f"degenerate input: {exc}", file=_sys.stderr)
        return DEGENERATE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
