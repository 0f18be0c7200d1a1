import itertools
import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyarea.elk import (
    beta_entry,
    block_signature_check,
    build_B,
    degree_block_indices,
    dump_B,
    elk_index,
    middle_block,
    square_free_basis,
    without_middle_block,
)
from polyarea.linalg import SymmetricRationalMatrix, exact_signature
from polyarea.milnor import w_values
from polyarea.morse import degenerate_index


def test_build_B_n3():
    B = build_B(3)
    assert B.dim == 4
    # basis: 1, x1, x2, x1x2; only degree pairs summing to 2 pair up
    w0, w1 = w_values(1).values
    expected = [
        [0, 0, 0, w1],
        [0, w0, w1, 0],
        [0, w1, w0, 0],
        [w1, 0, 0, 0],
    ]
    assert B.rows == [[Fraction(v) for v in row] for row in expected]
    assert np.allclose(sorted(np.linalg.eigvalsh(np.array(middle_block(3).rows, dtype=float))), [-3.0, -1.0])


def test_beta_entry_rules():
    assert beta_entry((1, 2), (3, 4), 5) == w_values(2)[2]
    assert beta_entry((1, 2), (1, 3), 5) == w_values(2)[1]
    assert beta_entry((1, 2), (1, 2), 5) == w_values(2)[0]
    assert beta_entry((1,), (1, 2), 5) == 0
    with pytest.raises(ValueError):
        beta_entry((5,), (1, 2, 3), 5)
    with pytest.raises(ValueError):
        beta_entry((), (), 4)


@pytest.mark.parametrize("n,expected", [(3, -2), (5, 6), (7, -20), (9, 70)])
def test_signature(n, expected):
    sig = exact_signature(build_B(n))
    assert sig.zeros == 0
    assert sig.signature == expected == degenerate_index(n)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_middle_block_carries_signature(n):
    assert block_signature_check(n)
    assert exact_signature(without_middle_block(n)).signature == 0
    m = (n - 1) // 2
    assert middle_block(n).dim == comb(n - 1, m)


def test_elk_index_limit():
    assert elk_index(5) == 6
    with pytest.raises(ValueError):
        elk_index(11)
    with pytest.raises(ValueError):
        build_B(13)


def test_basis_order():
    basis = square_free_basis(5)
    assert len(basis) == 16
    assert [len(s) for s in basis] == sorted(len(s) for s in basis)
    assert degree_block_indices(5, 2) == list(range(5, 11))


@pytest.mark.parametrize("n", [5, 7])
def test_variable_permutation_invariance(n):
    B = build_B(n)
    basis = square_free_basis(n)
    index = {s: i for i, s in enumerate(basis)}
    rng = random.Random(n)
    for _ in range(3):
        sigma = list(range(1, n))
        rng.shuffle(sigma)
        perm = [index[tuple(sorted(sigma[i - 1] for i in s))] for s in basis]
        assert B.permuted(perm) == B


def test_dump_round_trip(tmp_path):
    path = dump_B(5, tmp_path / "b5.txt")
    assert SymmetricRationalMatrix.from_text(path.read_text()) == build_B(5)


rational = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda d: st.lists(rational, min_size=d * (d + 1) // 2, max_size=d * (d + 1) // 2).map(lambda v: (d, v))))
def test_exact_signature_matches_float_inertia(dv):
    d, vals = dv
    it = iter(vals)
    M = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            M[i][j] = M[j][i] = next(it)
    res = exact_signature(SymmetricRationalMatrix(M))
    ev = np.linalg.eigvalsh(np.array(M, dtype=float))
    # exact rank from sympy to avoid float zero ambiguity
    import sympy

    r = sympy.Matrix(M).rank()
    assert res.dim == d and res.zeros == d - r
    assert res.positives == int(np.sum(ev > 1e-9)) and res.negatives == int(np.sum(ev < -1e-9))


def test_hyperbolic_pivot():
    res = exact_signature(SymmetricRationalMatrix([[0, 1], [1, 0]]))
    assert (res.positives, res.negatives, res.zeros) == (1, 1, 0)
    res = exact_signature(SymmetricRationalMatrix([[0, 0], [0, 0]]))
    assert res.zeros == 2
