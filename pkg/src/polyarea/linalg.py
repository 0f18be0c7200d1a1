"""Exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` or Python ints, so
results carry no rounding.  python-flint is used for characteristic
polynomials of large matrices when it is installed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

try:  # pragma: no cover - exercised implicitly
    import flint
except ImportError:  # pragma: no cover
    flint = None


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class SymmetricRationalMatrix:
    """Dense symmetric matrix of Fractions."""

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[as_fraction(v) for v in row] for row in entries]
        dim = len(rows)
        for i, row in enumerate(rows):
            if len(row) != dim:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i}, {j})")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricRationalMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SymmetricRationalMatrix(dim={self.dim})"

    def submatrix(self, indices: Sequence[int]) -> "SymmetricRationalMatrix":
        return SymmetricRationalMatrix([[self.rows[i][j] for j in indices] for i in indices])

    def permuted(self, perm: Sequence[int]) -> "SymmetricRationalMatrix":
        return self.submatrix(perm)

    def shifted(self, lam) -> "SymmetricRationalMatrix":
        """M - lam * I."""
        lam = as_fraction(lam)
        return SymmetricRationalMatrix(
            [[v - lam if i == j else v for j, v in enumerate(row)] for i, row in enumerate(self.rows)]
        )

    def to_text(self) -> str:
        """One row per line, entries as ``num/den`` separated by spaces."""
        return "\n".join(" ".join(f"{v.numerator}/{v.denominator}" for v in row) for row in self.rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SymmetricRationalMatrix":
        return cls([[Fraction(tok) for tok in line.split()] for line in text.splitlines() if line.strip()])

    def to_flint(self):
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        d = self.dim
        return flint.fmpq_mat(d, d, [flint.fmpq(v.numerator, v.denominator) for row in self.rows for v in row])


@dataclass(frozen=True)
class SignatureResult:
    positives: int
    negatives: int
    zeros: int

    @property
    def signature(self) -> int:
        return self.positives - self.negatives

    @property
    def dim(self) -> int:
        return self.positives + self.negatives + self.zeros


def exact_signature(M: SymmetricRationalMatrix) -> SignatureResult:
    """Inertia of ``M`` by symmetric congruence reduction over Q.

    A nonzero diagonal entry is used as a 1x1 pivot.  When every remaining
    diagonal entry vanishes, a nonzero off-diagonal a_ij gives the hyperbolic
    block [[0, a], [a, 0]], which contributes one positive and one negative
    square.
    """
    A = [list(row) for row in M.rows]
    active = list(range(len(A)))
    pos = neg = 0
    while active:
        piv = next((k for k in active if A[k][k]), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            col = [(r, A[r][piv]) for r in active if A[r][piv]]
            for r, a_r in col:
                factor = a_r / d
                row = A[r]
                for c, a_c in col:
                    row[c] -= factor * a_c
            continue

        pair = next(((i, j) for i in active for j in active if j > i and A[i][j]), None)
        if pair is None:
            break
        i, j = pair
        a = A[i][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        ci = [(r, A[r][i]) for r in active if A[r][i]]
        cj = [(r, A[r][j]) for r in active if A[r][j]]
        for r, a_ri in ci:
            row = A[r]
            for c, a_cj in cj:
                row[c] -= a_ri * a_cj / a
        for r, a_rj in cj:
            row = A[r]
            for c, a_ci in ci:
                row[c] -= a_rj * a_ci / a
    return SignatureResult(pos, neg, len(active))


# -- sparse fraction-free elimination -------------------------------------

SparseRow = dict  # column index -> int


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


def integer_echelon(rows: Iterable[Mapping[int, int]]) -> dict[int, SparseRow]:
    """Row echelon form of integer rows, keyed by leading column.

    Reduction is fraction-free: r <- a*r - c*pivot, then divide out the
    content, so entries stay integral and moderately sized.
    """
    pivots: dict[int, SparseRow] = {}
    for src in rows:
        r = {k: int(v) for k, v in src.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(r)
                break
            a, c = piv[lead], r[lead]
            g = gcd(a, c)
            a, c = a // g, c // g
            new = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - c * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    return pivots


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    return len(integer_echelon(rows))


def sparse_nullspace(rows: Iterable[Mapping[int, int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    pivots = integer_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    order = sorted(pivots, reverse=True)
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for lead in order:
            row = pivots[lead]
            s = sum((v * x[k] for k, v in row.items() if k != lead), Fraction(0))
            x[lead] = -s / row[lead]
        basis.append(x)
    return basis


def rank(M: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix (dense input), by fraction-free elimination."""
    rows = []
    for row in M:
        fr = [as_fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        rows.append({j: int(v * den) for j, v in enumerate(fr) if v})
    return sparse_rank(rows)


def matrix_rank(M: SymmetricRationalMatrix, method: str = "auto") -> int:
    if method == "auto":
        method = "flint" if flint is not None and M.dim > 24 else "elimination"
    if method == "flint":
        return M.to_flint().rref()[1]
    if method == "elimination":
        return rank(M.rows)
    raise ValueError(f"unknown method {method!r}")


# -- characteristic polynomials -------------------------------------------


def charpoly_berkowitz(M: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients of det(x I - M), highest degree first, division-free."""
    A = [[as_fraction(v) for v in row] for row in M]
    n = len(A)
    if n == 0:
        return [Fraction(1)]
    vect = [Fraction(1), -A[0][0]]
    for r in range(1, n):
        col = [A[i][r] for i in range(r)]
        row = A[r][:r]
        q = [Fraction(1), -A[r][r]]
        x = col
        for _ in range(r):
            q.append(-sum((a * b for a, b in zip(row, x)), Fraction(0)))
            x = [sum((A[i][k] * x[k] for k in range(r)), Fraction(0)) for i in range(r)]
        vect = [
            sum((q[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(q)), Fraction(0))
            for i in range(r + 2)
        ]
    return vect


def charpoly_flint(M: SymmetricRationalMatrix) -> list[Fraction]:
    coeffs = M.to_flint().charpoly().coeffs()
    return [Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)]


def charpoly(M: SymmetricRationalMatrix, method: str = "auto") -> list[Fraction]:
    """Exact characteristic polynomial, highest degree first.

    ``method`` is "berkowitz", "flint", or "auto" (flint for dim > 24 when
    available).
    """
    if method == "auto":
        method = "flint" if flint is not None and M.dim > 24 else "berkowitz"
    if method == "flint":
        return charpoly_flint(M)
    if method == "berkowitz":
        return charpoly_berkowitz(M.rows)
    raise ValueError(f"unknown method {method!r}")


def poly_from_roots(roots: Iterable[tuple[Fraction, int]]) -> list[Fraction]:
    """Expand prod (x - r)^k, highest degree first."""
    coeffs = [Fraction(1)]
    for r, k in roots:
        r = as_fraction(r)
        for _ in range(k):
            nxt = coeffs + [Fraction(0)]
            for i, c in enumerate(coeffs):
                nxt[i + 1] -= r * c
            coeffs = nxt
    return coeffs
