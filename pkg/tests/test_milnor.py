from fractions import Fraction
from math import comb

import pytest
import sympy

from polyarea.milnor import (
    basis_dimensions,
    derive_top_relations,
    hessian_class_coefficient,
    hessian_class_direct,
    hessian_polynomial,
    jacobian,
    quotient_dimension,
    relation_coefficient,
    three_jet,
    three_term_residuals,
    verify_three_term_relations,
    w_values,
)


def to_sympy(poly, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(x**e for x, e in zip(xs, exps)) for exps, c in poly.items())


def test_w_lists():
    assert w_values(1).values == (Fraction(-2), Fraction(1))
    assert w_values(2).values == (Fraction(8, 3), Fraction(-2, 3), Fraction(1))
    assert w_values(3).values == (Fraction(-16, 5), Fraction(8, 15), Fraction(-2, 5), Fraction(1))


@pytest.mark.parametrize("m", range(1, 12))
def test_w_recurrence_and_relations(m):
    w = w_values(m)
    assert w[m] == 1
    assert w.satisfies_recurrence()
    assert verify_three_term_relations(m)
    assert all(r == 0 for r in three_term_residuals(m))


def test_residuals_detect_wrong_vector():
    wrong = list(w_values(3).values)
    wrong[0] += 1
    assert any(r != 0 for r in three_term_residuals(3, wrong))


@pytest.mark.parametrize("n", [3, 5, 6])
def test_three_jet_against_sympy(n):
    xs = sympy.symbols(f"x1:{n}")
    expected = (sum(x**3 for x in xs) - sum(xs) ** 3) / 3
    assert sympy.expand(to_sympy(three_jet(n), xs) - expected) == 0
    for i, d in enumerate(jacobian(n)):
        assert sympy.expand(to_sympy(d, xs) - sympy.diff(expected, xs[i])) == 0


@pytest.mark.parametrize("n", [3, 5])
def test_hessian_polynomial_is_scaled_determinant(n):
    xs = sympy.symbols(f"x1:{n}")
    f = (sum(x**3 for x in xs) - sum(xs) ** 3) / 3
    det = sympy.Matrix(len(xs), len(xs), lambda i, j: sympy.diff(f, xs[i], xs[j])).det()
    assert sympy.expand(det / 2 ** len(xs) - to_sympy(hessian_polynomial(n), xs)) == 0


def test_graded_dimensions_n5():
    dims = [quotient_dimension(5, d) for d in range(6)]
    assert dims == basis_dimensions(5) + [0]
    assert dims == [comb(4, d) for d in range(5)] + [0]


def test_square_relation_n5():
    # x_1^2 - c * sum_{i<j} x_i x_j lies in the ideal: adding it keeps the degree-2 rank
    from polyarea.linalg import sparse_rank
    from polyarea.milnor import ideal_rows, monomials

    n, N = 5, 4
    cols, rows = ideal_rows(n, 2)
    index = {e: k for k, e in enumerate(cols)}
    c = relation_coefficient(n)
    rel = {index[(2, 0, 0, 0)]: Fraction(1)}
    for e in monomials(N, 2):
        if max(e) == 1:
            rel[index[e]] = -c
    den = 1
    for v in rel.values():
        den = den * v.denominator
    rel = {k: int(v * den) for k, v in rel.items()}
    assert sparse_rank(rows + [rel]) == sparse_rank(rows)


def test_even_n_warns_and_rejects():
    with pytest.warns(UserWarning):
        basis_dimensions(6)
    with pytest.raises(ValueError):
        derive_top_relations(6)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_derived_functional_reproduces_w(n):
    m = (n - 1) // 2
    reduced = derive_top_relations(n)
    full = derive_top_relations(n, full=n <= 5)
    for rel in (reduced, full):
        assert rel.top_dimension == 1
        assert len(rel.w_space) == 1
        assert rel.parity_consistent
        assert rel.w == w_values(m).values
        assert rel.proportional_to([3 * v for v in w_values(m).values])


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_hessian_class(n):
    assert hessian_class_coefficient(n) == n


@pytest.mark.parametrize("n", [3, 5, 7])
def test_hessian_class_direct(n):
    assert hessian_class_direct(n) == n


@pytest.mark.slow
def test_graded_dimensions_n7():
    assert [quotient_dimension(7, d) for d in range(8)] == basis_dimensions(7) + [0]
