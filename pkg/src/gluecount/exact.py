"""Exact integer helpers: factorials, odd double factorials, compositions.

Everything here returns plain Python ints (arbitrary precision); no value is
ever rounded.
"""

from __future__ import annotations

import threading
from typing import Iterator

from .errors import DomainError

__all__ = ["factorial", "double_factorial_odd", "compositions"]

# Monotone factorial table: grows on demand, never evicted.
_FACTORIALS = [1]
_FACTORIALS_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """n! for n >= 0. Repeated calls are O(1) thanks to the shared table."""
    if n < 0:
        raise DomainError(f"factorial requires n >= 0, got {n}")
    table = _FACTORIALS
    if n < len(table):
        return table[n]
    with _FACTORIALS_LOCK:
        while len(table) <= n:
            table.append(table[-1] * len(table))
    return table[n]


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1); the empty product 1 for n = 0."""
    if n < 0:
        raise DomainError(f"double_factorial_odd requires n >= 0, got {n}")
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Yield all ordered tuples of `length` non-negative ints summing to `total`.

    Tuples come out in lexicographic order; there are C(total+length-1, length-1)
    of them. The stream is lazy so callers can abandon it early.
    """
    if total < 0:
        raise DomainError(f"compositions requires total >= 0, got {total}")
    if length < 1:
        raise DomainError(f"compositions requires length >= 1, got {length}")
    return _compositions(total, length)


def _compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, length - 1):
            yield (head,) + tail
