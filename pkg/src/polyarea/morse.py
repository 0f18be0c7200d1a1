"""Hessian spectra, Morse indices and the index ledger of the signed area."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from polyarea.catalog import CriticalKind, CriticalSpec, count_by_b, half_dim
from polyarea.polygon import Configuration, hessian


@dataclass(frozen=True)
class SpectrumReport:
    """Closed-form Hessian spectrum at a Morse critical point.

    ``spec`` is the cyclic relabeling the formula applies to (the closing
    edge lies in the majority direction); the index does not depend on it.
    """

    spec: CriticalSpec
    p: float
    eigenvalues: tuple[tuple[float, int], ...]
    morse_index: int
    degenerate: bool = False
    quadratic: tuple[float, float] | None = None

    def values(self) -> np.ndarray:
        """Eigenvalues expanded by multiplicity, ascending."""
        vals = [v for v, k in self.eigenvalues for _ in range(k)]
        return np.sort(np.array(vals))


def canonical_rotation(spec: CriticalSpec) -> CriticalSpec:
    """Relabel vertices cyclically so the closing edge points in the majority direction."""
    if not spec.kind.is_morse:
        raise ValueError(f"{spec.kind.value} has no Morse spectrum")
    major = 1 if spec.f > spec.b else -1
    pat = spec.pattern
    for r in range(spec.n):
        rotated = pat[r:] + pat[:r]
        if rotated[-1] == major:
            return CriticalSpec(spec.n, spec.kind, rotated, spec.omega, spec.theta)
    raise AssertionError("unreachable: majority sign always occurs")


def closed_form_spectrum(spec: CriticalSpec) -> SpectrumReport:
    """Eigenvalues from the factorized characteristic polynomial.

    With c edges sharing the closing edge's direction, o = n - c the others and
    p = sin(alpha_n), the characteristic polynomial is
    (x^2 + (n-1) p x + (o-c) p^2) (x - p)^(o-1) (x + p)^(c-2).
    Choosing the closing edge in the majority keeps both exponents >= 0.
    """
    if not spec.kind.is_morse:
        raise ValueError(f"{spec.kind.value} is not a Morse critical point")
    n = spec.n
    rot = canonical_rotation(spec)
    major = rot.pattern[-1]
    p = math.sin(major * rot.theta)
    if spec.kind is CriticalKind.REGULAR_STAR:
        eig = ((-n * p, 1), (-p, n - 2))
        quad = None
    else:
        c = max(spec.f, spec.b)
        o = n - c
        lin, const = (n - 1) * p, (o - c) * p * p
        disc = math.sqrt(lin * lin - 4.0 * const)
        roots = ((-lin - disc) / 2.0, (-lin + disc) / 2.0)
        eig = tuple((v, k) for v, k in ((roots[0], 1), (roots[1], 1), (p, o - 1), (-p, c - 2)) if k > 0)
        quad = (lin, const)
    index = sum(k for v, k in eig if v < 0)
    return SpectrumReport(rot, p, eig, index, False, quad)


def numeric_spectrum(cfg: Configuration) -> np.ndarray:
    """Eigenvalues of the Hessian from a symmetric eigensolver, ascending."""
    return np.linalg.eigvalsh(hessian(cfg))


def spectra_match(a, b, tol: float = 1e-9) -> bool:
    a, b = np.sort(np.asarray(a, float)), np.sort(np.asarray(b, float))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))


def morse_index(spec: CriticalSpec) -> int:
    """f - 1 when forward edges dominate, f otherwise."""
    if not spec.kind.is_morse:
        raise ValueError(f"{spec.kind.value} has no Morse index")
    return spec.f - 1 if spec.f > spec.b else spec.f


def _require_odd(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    return half_dim(n)


def degenerate_index(n: int) -> int:
    """Gradient index at the degenerate star, 2 (-1)^m C(n-2, m-1)."""
    m = _require_odd(n)
    return 2 * (-1) ** m * comb(n - 2, m - 1)


def alternating_index_sum(n: int) -> int:
    """-2 sum_{b<m} (-1)^b C(n,b)(m-b): the index forced by Poincare-Hopf."""
    m = _require_odd(n)
    return -2 * sum((-1) ** b * comb(n, b) * (m - b) for b in range(m))


@dataclass(frozen=True)
class LedgerRow:
    b: int
    description: str
    count: int
    morse_index: int
    contribution: int


@dataclass(frozen=True)
class IndexLedger:
    n: int
    rows: tuple[LedgerRow, ...]
    degenerate_index: int
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", sum(r.contribution for r in self.rows) + self.degenerate_index)


def poincare_hopf_ledger(n: int) -> IndexLedger:
    """Signed index sum over all zeros of the gradient field; total must be 0."""
    m = _require_odd(n)
    rows = []
    for b in range(n + 1):
        f = n - b
        count = count_by_b(n, b)
        if count == 0:
            continue
        index = f - 1 if f > b else f
        rows.append(LedgerRow(b, f"b={b}", count, index, (-1) ** index * count))
    return IndexLedger(n, tuple(rows), degenerate_index(n))


def ledger_sequence(ledger: IndexLedger) -> list[int]:
    """Contributions in the order b = 0..n with the degenerate index in the middle."""
    seq = [r.contribution for r in ledger.rows]
    half = sum(1 for r in ledger.rows if r.b <= half_dim(ledger.n))
    return seq[:half] + [ledger.degenerate_index] + seq[half:]
