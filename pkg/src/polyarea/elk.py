"""Signature of the Eisenbud-Levine-Khimshiashvili form at the degenerate star.

The Milnor algebra of the 3-jet (n = 2m + 1) has the square-free monomials as
basis.  The functional l is 1 on the top class w_m and 0 below top degree, so
beta(x^s, x^t) = l(x^s x^t) vanishes unless |s| + |t| = n - 1, in which case
the product has 2(m - p) odd exponents (p = |s & t|) and beta = w_{m-p}.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable

from polyarea.linalg import SignatureResult, SymmetricRationalMatrix, exact_signature
from polyarea.milnor import w_values

__all__ = [
    "SignatureResult",
    "beta_entry",
    "block_signature_check",
    "build_B",
    "elk_index",
    "exact_signature",
    "square_free_basis",
]

MAX_N = 11


def _half(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    return (n - 1) // 2


@lru_cache(maxsize=None)
def _w(m: int) -> tuple[Fraction, ...]:
    return w_values(m).values


def beta_entry(sigma: Iterable[int], tau: Iterable[int], n: int) -> Fraction:
    """l(x^sigma * x^tau) for square-free supports within {1, ..., n-1}."""
    m = _half(n)
    s, t = frozenset(sigma), frozenset(tau)
    if any(not 1 <= i <= n - 1 for i in s | t):
        raise ValueError(f"supports must lie in 1..{n - 1}")
    if len(s) + len(t) != n - 1:
        return Fraction(0)
    return _w(m)[m - len(s & t)]


def square_free_basis(n: int) -> list[tuple[int, ...]]:
    """Square-free supports ordered by degree, then lexicographically."""
    N = n - 1
    return [c for d in range(N + 1) for c in itertools.combinations(range(1, N + 1), d)]


def build_B(n: int) -> SymmetricRationalMatrix:
    """Matrix of beta on the 2^(n-1) square-free monomials."""
    _half(n)
    if n > MAX_N:
        raise ValueError(f"build_B limited to n <= {MAX_N} (dimension 2^(n-1))")
    basis = [frozenset(s) for s in square_free_basis(n)]
    zero = Fraction(0)
    rows = [[beta_entry(s, t, n) if len(s) + len(t) == n - 1 else zero for t in basis] for s in basis]
    return SymmetricRationalMatrix(rows)


def degree_block_indices(n: int, degree: int) -> list[int]:
    N = n - 1
    start = sum(comb(N, d) for d in range(degree))
    return list(range(start, start + comb(N, degree)))


def middle_block(n: int) -> SymmetricRationalMatrix:
    return build_B(n).submatrix(degree_block_indices(n, _half(n)))


def without_middle_block(n: int) -> SymmetricRationalMatrix:
    """B with the B_{m,m} block set to zero: only the off-middle anti-diagonal pairing."""
    B = build_B(n)
    mid = set(degree_block_indices(n, _half(n)))
    rows = [[Fraction(0) if i in mid and j in mid else v for j, v in enumerate(row)] for i, row in enumerate(B.rows)]
    return SymmetricRationalMatrix(rows)


def elk_index(n: int, limit: int = 9) -> int:
    """Signature of the full bilinear form (the gradient index at the degenerate star)."""
    if n > limit:
        raise ValueError(f"elk_index above n={limit} needs an explicit larger limit")
    return exact_signature(build_B(n)).signature


def block_signature_check(n: int) -> bool:
    if n > 9:
        raise ValueError("block_signature_check is limited to n <= 9")
    B = build_B(n)
    mid = B.submatrix(degree_block_indices(n, _half(n)))
    return exact_signature(B).signature == exact_signature(mid).signature


def dump_B(n: int, path) -> Path:
    """Write B as plain text, one row per line, entries ``num/den``."""
    path = Path(path)
    path.write_text(build_B(n).to_text())
    return path
