import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyarea.intersection import (
    IntersectionMatrixSpec,
    build_intersection_matrix,
    check_spectrum,
    lambda_coefficients,
    lambda_formula,
    mu,
    predict,
    proposition_three_eigs,
    specialized_b,
    subsets,
)


def test_m1_by_hand():
    spec = IntersectionMatrixSpec(1, [Fraction(2), Fraction(5)])
    M = build_intersection_matrix(spec)
    assert M.rows == [[5, 2], [2, 5]]
    pred = predict(spec)
    assert sorted(pred.lambdas) == [3, 7]
    assert pred.mus == (1, 1)


def test_printed_coefficient_lists():
    # lambda_k as coefficient vectors over (b_0, ..., b_m), k ascending
    assert [lambda_coefficients(1, k) for k in range(2)] == [[1, 1], [-1, 1]]
    assert [lambda_coefficients(2, k) for k in range(3)] == [[1, 4, 1], [-1, 0, 1], [1, -2, 1]]
    assert [mu(2, k) for k in range(3)] == [1, 3, 2]
    assert [lambda_coefficients(3, k) for k in range(4)] == [[1, 9, 9, 1], [-1, -3, 3, 1], [1, -1, -1, 1], [-1, 3, -3, 1]]
    assert [mu(3, k) for k in range(4)] == [1, 5, 9, 5]


@pytest.mark.parametrize("m", range(1, 51))
def test_mu_sums_to_dimension(m):
    assert sum(mu(m, k) for k in range(m + 1)) == comb(2 * m, m)
    assert mu(m, 0) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_against_float_eigensolver(m):
    rng = np.random.default_rng(m)
    b = rng.normal(size=m + 1)
    sets = [frozenset(s) for s in subsets(m)]
    M = np.array([[b[len(s & t)] for t in sets] for s in sets])
    ev = np.sort(np.linalg.eigvalsh(M))
    pred = predict(IntersectionMatrixSpec(m, [Fraction(float(x)) for x in b]))
    expected = np.sort(np.repeat([float(l) for l in pred.lambdas], pred.mus))
    assert np.allclose(ev, expected, atol=1e-9)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_exact_check_both_backends(m):
    rng = random.Random(m)
    spec = IntersectionMatrixSpec(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m + 1)])
    assert check_spectrum(spec, method="berkowitz").ok
    assert check_spectrum(spec, method="flint").ok


def test_check_detects_wrong_b_vector():
    spec = IntersectionMatrixSpec(2, [1, 2, 3])
    assert check_spectrum(spec).ok
    # a perturbed matrix no longer matches the prediction for the original b
    M = build_intersection_matrix(spec)
    from polyarea.linalg import charpoly, poly_from_roots

    assert charpoly(M.shifted(1)) != poly_from_roots(predict(spec).roots())


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=9), min_size=4, max_size=4))
def test_random_b_property(m, b):
    assert check_spectrum(IntersectionMatrixSpec(m, b[: m + 1])).ok


@pytest.mark.parametrize("m", range(1, 9))
def test_specialized_eigenvalues(m):
    b = specialized_b(m)
    assert [lambda_formula(m, k, b) for k in range(m + 1)] == list(proposition_three_eigs(m))


def test_specialized_lists():
    assert proposition_three_eigs(1) == (-1, -3)
    assert proposition_three_eigs(2) == (1, Fraction(5, 3), 5)
    assert proposition_three_eigs(3) == (-1, Fraction(-7, 5), Fraction(-7, 3), -7)
    assert proposition_three_eigs(8) == tuple([Fraction(1)] + [Fraction(17, d) for d in (15, 13, 11, 9, 7, 5, 3, 1)])


def test_validation():
    with pytest.raises(ValueError):
        IntersectionMatrixSpec(2, [1, 2])
    with pytest.raises(ValueError):
        IntersectionMatrixSpec(0, [1])
    with pytest.raises(ValueError):
        lambda_formula(2, 3, [1, 2, 3])
    with pytest.raises(ValueError):
        check_spectrum(IntersectionMatrixSpec(6, [1] * 7))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_specialized_matrix_is_definite(m):
    from polyarea.linalg import exact_signature
    from polyarea.morse import degenerate_index

    sig = exact_signature(build_intersection_matrix(IntersectionMatrixSpec(m, specialized_b(m))))
    assert sig.zeros == 0
    assert sig.signature == (-1) ** m * comb(2 * m, m) == degenerate_index(2 * m + 1)
