"""
Index windows for sums whose q-exponent grows quadratically in the index.

Every enumerator walks away from a starting index until a convex lower
bound on the exponent has passed its minimum and exceeds the target order.
From then on no further index can contribute.
"""

from typing import Callable, Iterator


def binom2(n: int) -> int:
    """binom(n, 2) = n(n-1)/2, valid for negative n"""
    return n * (n - 1) // 2


def sg(r: int) -> int:
    return 1 if r >= 0 else -1


def escape_indices(lower_bound: Callable[[int], int], start: int, step: int,
                   order: int) -> Iterator[int]:
    """
    Yield start, start + step, ... for a convex lower_bound.

    Stops at the first index whose bound exceeds order while the bound is
    no longer decreasing; convexity keeps every later bound above order.
    Indices before the minimum are yielded even when their bound is large,
    so callers still filter on the actual exponent.
    """
    i = start
    while True:
        value = lower_bound(i)
        if value > order and lower_bound(i + step) >= value:
            return
        yield i
        i += step


def bilateral_indices(lower_bound: Callable[[int], int], order: int) -> Iterator[int]:
    """All integers that can contribute: 0, 1, 2, ... then -1, -2, ..."""
    yield from escape_indices(lower_bound, 0, 1, order)
    yield from escape_indices(lower_bound, -1, -1, order)


def convex_minimum(values: Callable[[int], int], start: int, step: int) -> int:
    """Minimum of a convex sequence over start, start + step, ..."""
    best = values(start)
    i = start + step
    while True:
        value = values(i)
        if value >= best:
            return best
        best = value
        i += step
