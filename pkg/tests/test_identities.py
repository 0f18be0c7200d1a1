from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyarea.identities import (
    F,
    g_recurrence_stencil,
    in_support,
    key_identity_sides,
    key_identity_stencil,
    sum_F,
    sum_F_closed_form,
    verify_g_recurrence,
    verify_key_identity,
)
from polyarea.intersection import lambda_formula, specialized_b


def test_support():
    assert F(3, 1, 2, 0) == 0
    assert F(3, 1, 0, 3) == 0
    assert F(3, 1, -1, 0) == 0
    assert in_support(3, 1, 1, 2)
    assert F(0, 0, 0, 0) == 1


def test_F_is_lambda_summand():
    # sum_{j,p} F(m,k,j,p) is lambda_k at the specialized b vector
    for m in range(1, 7):
        b = specialized_b(m)
        for k in range(m + 1):
            assert sum_F(m, k) == lambda_formula(m, k, b)


def test_key_identity_stencil():
    rep = key_identity_stencil(4, 10)
    assert rep.ok and rep.checked == 2254


def test_g_recurrence_stencil():
    assert g_recurrence_stencil(1, 10).ok


@given(st.integers(4, 14), st.data())
def test_key_identity_random(m, data):
    k = data.draw(st.integers(0, m))
    j = data.draw(st.integers(-2, k + 2))
    p = data.draw(st.integers(-2, m - k + 2))
    lhs, rhs = key_identity_sides(m, k, j, p)
    assert lhs == rhs and verify_key_identity(m, k, j, p)


@given(st.integers(1, 20), st.integers(-3, 25))
def test_g_recurrence_random(m, p):
    assert verify_g_recurrence(m, p)


@pytest.mark.parametrize("m", range(0, 21))
def test_sums(m):
    assert sum_F(m, 0) == (-1) ** m
    for k in range(m + 1):
        assert sum_F(m, k) == sum_F_closed_form(m, k) == Fraction((-1) ** m * (2 * m + 1), 2 * m - 2 * k + 1)


def test_sum_range_check():
    with pytest.raises(ValueError):
        sum_F(3, 4)
