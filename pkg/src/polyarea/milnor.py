"""Milnor algebra of the cubic part of the signed area at the degenerate star.

With N = n - 1 variables the 3-jet is f = (x_1^3 + ... + x_N^3 - (x_1 + ... + x_N)^3) / 3.
For odd n = 2m + 1 its Milnor algebra is graded with 1-dimensional top degree
N = 2m, and every top-degree monomial is a multiple of one class.  The class
of a monomial only depends on how many of its exponents are odd; w_k denotes
the class with 2k odd exponents.

Polynomials are dicts mapping exponent tuples to Fractions.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Iterable, Optional

from polyarea.combinat import double_factorial
from polyarea.linalg import integer_echelon, sparse_nullspace

Monomial = tuple[int, ...]
Poly = dict  # Monomial -> Fraction


def _check_n(n: int) -> int:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return n - 1


def monomials(nvars: int, degree: int) -> list[Monomial]:
    """Exponent tuples of the given total degree, in a fixed order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def poly_diff(a: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in a.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = out.get(tuple(d), 0) + c * e[i]
    return {e: c for e, c in out.items() if c}


def three_jet(n: int) -> Poly:
    """f = (sum x_i^3 - (sum x_i)^3) / 3 in n - 1 variables."""
    N = _check_n(n)
    third = Fraction(1, 3)
    f: Poly = {}
    for e in monomials(N, 3):
        multinomial = factorial(3)
        for k in e:
            multinomial //= factorial(k)
        c = -third * multinomial
        if max(e) == 3:
            c += third
        if c:
            f[e] = c
    return f


def jacobian(n: int) -> list[Poly]:
    f = three_jet(n)
    return [poly_diff(f, i) for i in range(n - 1)]


def relation_coefficient(n: int) -> Fraction:
    """The constant c with x_i^2 = c * sum_{i<j} x_i x_j modulo the Jacobian ideal."""
    _check_n(n)
    return Fraction(-2, n - 2)


def _integer_row(poly: Poly, index: dict) -> dict:
    den = lcm(*(Fraction(c).denominator for c in poly.values()))
    return {index[e]: int(c * den) for e, c in poly.items()}


def ideal_rows(n: int, degree: int) -> tuple[list[Monomial], list[dict]]:
    """Spanning set of the degree part of the Jacobian ideal, as integer rows."""
    N = _check_n(n)
    cols = monomials(N, degree)
    if degree < 2:
        return cols, []
    index = {e: k for k, e in enumerate(cols)}
    rows = []
    for df in jacobian(n):
        for q in monomials(N, degree - 2):
            rows.append(_integer_row(poly_mul(df, {q: Fraction(1)}), index))
    return cols, rows


def quotient_dimension(n: int, degree: int) -> int:
    """dim of the degree part of the Milnor algebra, by exact rank of the ideal's part."""
    cols, rows = ideal_rows(n, degree)
    return len(cols) - len(integer_echelon(rows))


def basis_dimensions(n: int) -> list[int]:
    """Predicted graded dimensions C(n-1, d), d = 0..n-1 (square-free monomial basis)."""
    N = _check_n(n)
    if n % 2 == 0:
        warnings.warn("even n: the complexified singularity is not isolated", stacklevel=2)
    return [comb(N, d) for d in range(N + 1)]


@dataclass(frozen=True)
class WVector:
    """Top-degree classes w_0..w_m, scaled so that w_m = 1."""

    m: int
    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def satisfies_recurrence(self) -> bool:
        w = self.values
        return w[self.m] == 1 and all(
            w[p - 1] == -Fraction(2 * self.m + 2 - 2 * p, 2 * p - 1) * w[p] for p in range(1, self.m + 1)
        )


def w_values(m: int) -> WVector:
    """w_k = (-1)^(m-k) (2m-2k)!! (2k-1)!! / (2m-1)!!."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    den = double_factorial(2 * m - 1)
    vals = tuple(
        Fraction((-1) ** (m - k) * double_factorial(2 * m - 2 * k) * double_factorial(2 * k - 1), den)
        for k in range(m + 1)
    )
    return WVector(m, vals)


def three_term_residuals(m: int, w: Optional[Iterable[Fraction]] = None) -> list[Fraction]:
    """Left sides of the top-degree relations for p = 0..m-1 (all zero when w solves them)."""
    n = 2 * m + 1
    w = list(w_values(m).values if w is None else w)

    def at(k):
        return w[k] if 0 <= k <= m else Fraction(0)

    out = []
    for p in range(m):
        mid = Fraction(n - 2, 2) + 2 * p * (n - 1 - 2 * p)
        out.append(comb(2 * p, 2) * at(p - 1) + mid * at(p) + comb(n - 1 - 2 * p, 2) * at(p + 1))
    return out


def verify_three_term_relations(m: int) -> bool:
    return all(r == 0 for r in three_term_residuals(m))


# -- independent derivation of the top-degree relations -------------------


def odd_support(e: Monomial) -> frozenset:
    return frozenset(i for i, k in enumerate(e) if k % 2)


def parity_class(e: Monomial) -> int:
    """k such that the monomial has 2k odd exponents."""
    return len(odd_support(e)) // 2


def canonical_monomial(A: frozenset, nvars: int, degree: int) -> Monomial:
    """x^A times the power of x_1 filling up the degree."""
    e = [1 if i in A else 0 for i in range(nvars)]
    e[0] += degree - len(A)
    return tuple(e)


@dataclass(frozen=True)
class TopRelations:
    """Result of eliminating over the top-degree part of the Jacobian ideal.

    ``functional`` is the linear form vanishing on the ideal, normalized to 1
    on x_1 ... x_{2m}; ``full`` tells whether it was computed on all
    monomials or after reducing x_i^2 to x_1^2.
    """

    n: int
    m: int
    full: bool
    top_dimension: int
    parity_consistent: bool
    w: Optional[tuple[Fraction, ...]]
    w_space: tuple[tuple[Fraction, ...], ...]
    functional: dict

    def proportional_to(self, other: Iterable[Fraction]) -> bool:
        if self.w is None:
            return False
        other = list(other)
        scale = other[-1] / self.w[-1]
        return all(a * scale == b for a, b in zip(self.w, other))


def derive_top_relations(n: int, full: bool = False) -> TopRelations:
    """Derive the w-vector from the degree n-1 part of the Jacobian ideal.

    The ideal part is spanned by (df/dx_i) * q with q of degree n-3.  With
    ``full`` the annihilating functional is computed on all degree n-1
    monomials.  Otherwise monomials are first reduced to x^A x_1^(2r) (A the
    set of odd exponents), which is exact because x_i^2 - x_1^2 is the
    difference of two partials.  Either way the functional is then checked to
    depend on |A| only, and the relations are re-solved in the w coordinates.
    """
    N = _check_n(n)
    if n % 2 == 0:
        raise ValueError("top-degree relations need odd n")
    if n > 9:
        raise ValueError("derive_top_relations is limited to n <= 9")
    m = (n - 1) // 2
    top = N
    if full:
        cols = monomials(N, top)
    else:
        cols = [canonical_monomial(frozenset(A), N, top)
                for r in range(0, N + 1, 2) for A in itertools.combinations(range(N), r)]
    index = {e: k for k, e in enumerate(cols)}

    def reduce(poly: Poly) -> Poly:
        if full:
            return poly
        out: Poly = {}
        for e, c in poly.items():
            key = canonical_monomial(odd_support(e), N, top)
            out[key] = out.get(key, 0) + c
        return {e: c for e, c in out.items() if c}

    rows, w_rows = [], []
    for df in jacobian(n):
        for q in monomials(N, top - 2):
            g = reduce(poly_mul(df, {q: Fraction(1)}))
            if not g:
                continue
            rows.append(_integer_row(g, index))
            by_class: Poly = {}
            for e, c in g.items():
                k = parity_class(e)
                by_class[(k,)] = by_class.get((k,), 0) + c
            by_class = {e: c for e, c in by_class.items() if c}
            if by_class:
                w_rows.append(_integer_row(by_class, {(k,): k for k in range(m + 1)}))

    null = sparse_nullspace(rows, len(cols))
    functional: dict = {}
    consistent = False
    w = None
    if len(null) == 1:
        vec = null[0]
        top_key = index[canonical_monomial(frozenset(range(N)), N, top)] if not full else index[(1,) * N]
        scale = vec[top_key]
        if scale:
            functional = {cols[k]: v / scale for k, v in enumerate(vec)}
            by_k: dict[int, set] = {}
            for e, v in functional.items():
                by_k.setdefault(parity_class(e), set()).add(v)
            consistent = all(len(vals) == 1 for vals in by_k.values()) and len(by_k) == m + 1
            if consistent:
                w = tuple(next(iter(by_k[k])) for k in range(m + 1))
    w_space = tuple(tuple(v) for v in sparse_nullspace(w_rows, m + 1))
    return TopRelations(n, m, full, len(null), consistent, w, w_space, functional)


def apply_functional(rel: TopRelations, poly: Poly) -> Fraction:
    """Evaluate the top-degree functional on a homogeneous polynomial of degree n-1."""
    N = rel.n - 1
    total = Fraction(0)
    for e, c in poly.items():
        if sum(e) != N:
            raise ValueError("polynomial must be homogeneous of degree n-1")
        key = e if rel.full else canonical_monomial(odd_support(e), N, N)
        total += c * rel.functional[key]
    return total


def hessian_polynomial(n: int) -> Poly:
    """h_f = x_1...x_N - sum_{i,j} x_i (x_1...x_N) / x_j, i.e. det(Hess f) / 2^N."""
    N = _check_n(n)
    h: Counter = Counter()
    h[(1,) * N] += 1
    for i in range(N):
        for j in range(N):
            e = [1] * N
            e[i] += 1
            e[j] -= 1
            h[tuple(e)] -= 1
    return {e: Fraction(c) for e, c in h.items() if c}


def hessian_class_coefficient(n: int) -> Fraction:
    """c with [h_f] = c * w_m, from [h_f] = -(n-2) w_m - (n-1)(n-2) w_{m-1}."""
    N = _check_n(n)
    if n % 2 == 0:
        raise ValueError("the Hessian class is defined here for odd n")
    m = N // 2
    w = w_values(m)
    return (-(n - 2) * w[m] - (n - 1) * (n - 2) * w[m - 1]) / w[m]


def hessian_class_direct(n: int, full: bool = False) -> Fraction:
    """Same coefficient, by applying the derived functional to the expanded h_f."""
    rel = derive_top_relations(n, full=full)
    if not rel.functional:
        raise ArithmeticError(f"top-degree functional not unique for n={n}")
    return apply_functional(rel, hessian_polynomial(n))
