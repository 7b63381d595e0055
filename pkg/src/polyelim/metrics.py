"""Lightweight instrumentation used by the benchmark command.

Pipelines report the bit sizes of their large intermediate integers here;
outside of an active `track_bits()` block the calls are near-free.
"""

from __future__ import annotations

from contextlib import contextmanager


class _Tracker:
    __slots__ = ("active", "max_bits")

    def __init__(self):
        self.active = False
        self.max_bits = 0


_TRACKER = _Tracker()


def note_int(value: int) -> None:
    if _TRACKER.active:
        bits = value.bit_length() if isinstance(value, int) else value.numerator.bit_length()
        if bits > _TRACKER.max_bits:
            _TRACKER.max_bits = bits


def note_many(values) -> None:
    if _TRACKER.active:
        for v in values:
            note_int(v)


@contextmanager
def track_bits():
    """Collect the peak intermediate bit size seen while the block runs."""
    _TRACKER.active = True
    _TRACKER.max_bits = 0
    try:
        yield _TRACKER
    finally:
        _TRACKER.active = False
