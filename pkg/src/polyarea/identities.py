"""Exact evaluation of the summand F(m, k, j, p) and the recurrences certifying its sums.

F(m, k, j, p) is the (j, p) term of the eigenvalue lambda_k of the
intersection matrix once b_q is specialized to the top-degree Milnor classes.
The key identity telescopes in j and p and so yields a recurrence for
sum_{j,p} F; the g-identity does the same for sum_p F(m, 0, 0, p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from polyarea.combinat import binom, double_factorial

__all__ = [
    "F",
    "Fj",
    "Fp",
    "double_factorial",
    "g",
    "key_identity_sides",
    "sum_F",
    "sum_F_closed_form",
    "verify_g_recurrence",
    "verify_key_identity",
]


def in_support(m: int, k: int, j: int, p: int) -> bool:
    return 0 <= p <= m - k and 0 <= j <= k


@lru_cache(maxsize=None)
def F(m: int, k: int, j: int, p: int) -> Fraction:
    if not in_support(m, k, j, p):
        return Fraction(0)
    sign = -1 if (k + p) % 2 else 1
    num = (
        sign
        * binom(k, j)
        * binom(m - j, p)
        * binom(j - k + m, j + p)
        * double_factorial(2 * (j + p))
        * double_factorial(2 * m - 2 * j - 2 * p - 1)
    )
    return Fraction(num, double_factorial(2 * m - 1))


def Fj(m: int, k: int, j: int, p: int) -> Fraction:
    return (2 * m - 7) * (k - 1) * (
        -4 * (k - 2) * (k + m - 4) * F(m - 3, k - 3, j, p + 1)
        + 4 * (m - 2) * (k - m) * F(m - 3, k - 2, j, p)
        - 4 * (m - 2) * (k - m) * F(m - 3, k - 2, j, p + 1)
        - (2 * m - 5) * (4 * k + 2 * m - 9) * F(m - 2, k - 2, j, p + 1)
        - (2 * k - 3) * (2 * m - 5) * F(m - 2, k - 2, j + 1, p + 1)
        + 2 * (2 * m - 5) * (k - m) * F(m - 2, k - 1, j, p)
        + 2 * (2 * m - 5) * (m - k) * F(m - 2, k - 1, j, p + 1)
        + 2 * (2 * m - 5) * (k - m) * F(m - 2, k - 1, j + 1, p)
        + 2 * (2 * m - 5) * (m - k) * F(m - 2, k - 1, j + 1, p + 1)
        - (2 * m - 5) * (2 * m - 3) * F(m - 1, k - 1, j, p + 1)
        - (2 * m - 5) * (2 * m - 3) * F(m - 1, k - 1, j + 1, p + 1)
    )


def Fp(m: int, k: int, j: int, p: int) -> Fraction:
    return (k - 1) * (
        -4 * (k - 3) * (k - 2) * (2 * m - 5) * F(m - 4, k - 4, j, p)
        - 4 * (k - 2) * (2 * m - 7) * (k + 2 * m - 6) * F(m - 3, k - 3, j, p)
        + 4 * (m - 2) * (2 * m - 7) * (m - k) * F(m - 3, k - 2, j, p)
        - (2 * m - 7) * (2 * m - 5) * (4 * k + 2 * m - 9) * F(m - 2, k - 2, j, p)
        + 2 * (2 * m - 7) * (2 * m - 5) * (m - k) * F(m - 2, k - 1, j, p)
        - (2 * m - 7) * (2 * m - 5) * (2 * m - 3) * F(m - 1, k - 1, j, p)
    )


def key_identity_sides(m: int, k: int, j: int, p: int) -> tuple[Fraction, Fraction]:
    lhs = (
        4 * (k - 3) * (k - 2) * (k - 1) * (2 * m - 5) * F(m - 4, k - 4, j, p)
        + 4 * (k - 2) * (k - 1) * (2 * m - 7) * (k + 2 * m - 6) * F(m - 3, k - 3, j, p)
        + (2 * m - 7) * (2 * m - 5) * (k - 1) * (4 * k + 2 * m - 9) * F(m - 2, k - 2, j, p)
        + (2 * m - 7) * (2 * m - 5) * (2 * m - 3) * (k - 1) * F(m - 1, k - 1, j, p)
    )
    rhs = Fj(m, k, j + 1, p) - Fj(m, k, j, p) + Fp(m, k, j, p + 1) - Fp(m, k, j, p)
    return lhs, rhs


def verify_key_identity(m: int, k: int, j: int, p: int) -> bool:
    lhs, rhs = key_identity_sides(m, k, j, p)
    return lhs == rhs


def g(m: int, p: int) -> Fraction:
    c = (2 * m - 1) * (2 * m + 1)
    return (
        4 * m * m * F(m - 1, 0, 0, p - 2)
        - c * F(m, 0, 0, p - 2)
        + c * F(m, 0, 0, p - 1)
        - c * F(m + 1, 0, 0, p - 2)
        - c * F(m + 1, 0, 0, p - 1)
    )


def verify_g_recurrence(m: int, p: int) -> bool:
    c = (2 * m - 1) * (2 * m + 1)
    return c * F(m, 0, 0, p - 2) + c * F(m + 1, 0, 0, p - 2) == g(m, p + 1) - g(m, p)


def sum_F(m: int, k: int) -> Fraction:
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    return sum((F(m, k, j, p) for j in range(k + 1) for p in range(m - k + 1)), Fraction(0))


def sum_F_closed_form(m: int, k: int) -> Fraction:
    """(-1)^m (2m+1) / (2(m-k)+1)."""
    return Fraction((-1) ** m * (2 * m + 1), 2 * (m - k) + 1)


@dataclass(frozen=True)
class StencilReport:
    checked: int
    failures: tuple[tuple[int, int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def key_identity_stencil(m_min: int = 4, m_max: int = 10) -> StencilReport:
    """Key identity over 0 <= k <= m, one step beyond the j and p supports on each side."""
    bad, n = [], 0
    for m in range(m_min, m_max + 1):
        for k in range(m + 1):
            for j in range(-1, k + 2):
                for p in range(-1, m - k + 2):
                    n += 1
                    if not verify_key_identity(m, k, j, p):
                        bad.append((m, k, j, p))
    return StencilReport(n, tuple(bad))


def g_recurrence_stencil(m_min: int = 1, m_max: int = 10) -> StencilReport:
    bad, n = [], 0
    for m in range(m_min, m_max + 1):
        for p in range(-1, m + 4):
            n += 1
            if not verify_g_recurrence(m, p):
                bad.append((m, 0, 0, p))
    return StencilReport(n, tuple(bad))
