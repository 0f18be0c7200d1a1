"""Matrices on m-subsets of a 2m-set whose entries depend on intersection size.

Rows and columns are indexed by the m-subsets of {0, ..., 2m-1} in
lexicographic order; the (sigma, tau) entry is b_p with p = |sigma & tau|.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from polyarea.combinat import binom, double_factorial
from polyarea.linalg import SymmetricRationalMatrix, as_fraction, charpoly, matrix_rank, poly_from_roots


@dataclass(frozen=True)
class IntersectionMatrixSpec:
    m: int
    b: tuple[Fraction, ...]

    def __init__(self, m: int, b: Sequence):
        if m < 1:
            raise ValueError(f"need m >= 1, got {m}")
        if len(b) != m + 1:
            raise ValueError(f"need m+1 = {m + 1} values b_0..b_m, got {len(b)}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "b", tuple(as_fraction(v) for v in b))

    @property
    def dim(self) -> int:
        return comb(2 * self.m, self.m)


@dataclass(frozen=True)
class EigenPrediction:
    lambdas: tuple[Fraction, ...]
    mus: tuple[int, ...]

    def roots(self) -> list[tuple[Fraction, int]]:
        merged: dict[Fraction, int] = defaultdict(int)
        for lam, mu_k in zip(self.lambdas, self.mus):
            merged[lam] += mu_k
        return list(merged.items())


def subsets(m: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(2 * m), m))


def build_intersection_matrix(spec: IntersectionMatrixSpec) -> SymmetricRationalMatrix:
    sets = [frozenset(s) for s in subsets(spec.m)]
    return SymmetricRationalMatrix([[spec.b[len(s & t)] for t in sets] for s in sets])


def lambda_formula(m: int, k: int, b: Sequence) -> Fraction:
    """Eigenvalue lambda_k as a signed binomial double sum over b_{j+p}.

    The ground set has 2m elements, so the third binomial is C(j-k+m, m-k-p).
    """
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    b = [as_fraction(v) for v in b]
    total = Fraction(0)
    for j in range(k + 1):
        for p in range(m - k + 1):
            c = (-1) ** (k - j) * binom(k, j) * binom(m - j, p) * binom(j - k + m, m - k - p)
            if c:
                total += c * b[j + p]
    return total


def lambda_coefficients(m: int, k: int) -> list[Fraction]:
    """lambda_k as a linear form in (b_0, ..., b_m), read off at unit vectors."""
    return [lambda_formula(m, k, [int(i == q) for i in range(m + 1)]) for q in range(m + 1)]


def mu(m: int, k: int) -> int:
    """Dimension of the lambda_k eigenspace, (2m)! (2m-2k+1) / (k! (2m-k+1)!)."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    num = factorial(2 * m) * (2 * m - 2 * k + 1)
    den = factorial(k) * factorial(2 * m - k + 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"mu({m}, {k}) = {num}/{den} is not an integer")
    return q


def predict(spec: IntersectionMatrixSpec) -> EigenPrediction:
    m = spec.m
    return EigenPrediction(
        tuple(lambda_formula(m, k, spec.b) for k in range(m + 1)),
        tuple(mu(m, k) for k in range(m + 1)),
    )


@dataclass(frozen=True)
class SpectrumCheck:
    charpoly_match: bool
    rank_match: bool
    ranks: tuple[tuple[Fraction, int, int], ...]  # (lambda, rank found, rank expected)

    @property
    def ok(self) -> bool:
        return self.charpoly_match and self.rank_match


def check_spectrum(spec: IntersectionMatrixSpec, ranks: bool = True, method: str = "auto") -> SpectrumCheck:
    """Compare the exact characteristic polynomial with prod (x - lambda_k)^mu_k.

    With ``ranks`` also confirm rank(M - lambda I) = dim - (eigenspace dim)
    for every distinct predicted eigenvalue.
    """
    if spec.m > 5:
        raise ValueError("intersection spectra are verified only for m <= 5 (dim <= 252)")
    M = build_intersection_matrix(spec)
    pred = predict(spec)
    cp_ok = charpoly(M, method) == poly_from_roots(pred.roots())
    rows = []
    if ranks:
        rank_method = "elimination" if method == "berkowitz" else method
        for lam, mult in pred.roots():
            rows.append((lam, matrix_rank(M.shifted(lam), rank_method), M.dim - mult))
    return SpectrumCheck(cp_ok, all(r == e for _, r, e in rows), tuple(rows))


def verify_spectrum(spec: IntersectionMatrixSpec) -> bool:
    return check_spectrum(spec, ranks=False).charpoly_match


def specialized_b(m: int) -> tuple[Fraction, ...]:
    """b_p = (-1)^p (2p)!! (2m-2p-1)!! / (2m-1)!!, p = 0..m."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    den = double_factorial(2 * m - 1)
    return tuple(
        Fraction((-1) ** p * double_factorial(2 * p) * double_factorial(2 * m - 2 * p - 1), den)
        for p in range(m + 1)
    )


def proposition_three_eigs(m: int) -> tuple[Fraction, ...]:
    """(-1)^m (2m+1) / (2m-2k+1) for k = 0..m."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return tuple(Fraction((-1) ** m * (2 * m + 1), 2 * m - 2 * k + 1) for k in range(m + 1))
