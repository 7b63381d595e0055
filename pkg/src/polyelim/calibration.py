"""Shared normalization protocol for all resultant pipelines.

The resultant is defined only up to a constant, so every pipeline divides
its raw output by the raw value it produces on the monomial reference
system {x_1^{r_1}, ..., x_n^{r_n}}.  After that, all pipelines agree
exactly and the reference system has resultant +1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import DegenerateError
from .polyring import PolySystem, reference_system

_REF_CACHE: dict = {}


def reference_value(key: str, raw_fn: Callable[[PolySystem], Fraction],
                    n: int, degrees: tuple) -> Fraction:
    cache_key = (key, n, tuple(degrees))
    val = _REF_CACHE.get(cache_key)
    if val is None:
        val = raw_fn(reference_system(n, degrees))
        if val == 0:
            raise DegenerateError(f"{key}: zero on the monomial reference system")
        _REF_CACHE[cache_key] = val
    return val


def calibrated(key: str, raw_fn: Callable[[PolySystem], Fraction],
               sys: PolySystem) -> Fraction:
    ref = reference_value(key, raw_fn, sys.n, sys.degrees)
    return raw_fn(sys) / ref
