"""Integer combinatorics with the conventions used throughout the package."""

from __future__ import annotations

from functools import lru_cache
from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b), zero whenever a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def double_factorial(x: int) -> int:
    """x!! with (-1)!! = 0!! = 1."""
    if x < -1:
        raise ValueError(f"double factorial undefined for {x}")
    r = 1
    while x > 1:
        r *= x
        x -= 2
    return r
