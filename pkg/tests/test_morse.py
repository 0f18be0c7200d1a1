from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyarea.catalog import enumerate_isolated, realize
from polyarea.morse import (
    alternating_index_sum,
    canonical_rotation,
    closed_form_spectrum,
    degenerate_index,
    ledger_sequence,
    morse_index,
    numeric_spectrum,
    poincare_hopf_ledger,
    spectra_match,
)
from polyarea.polygon import hessian


@pytest.mark.parametrize("n", range(3, 10))
def test_closed_form_matches_eigensolver(n):
    for spec in enumerate_isolated(n):
        if not spec.kind.is_morse:
            continue
        rep = closed_form_spectrum(spec)
        assert spectra_match(rep.values(), numeric_spectrum(realize(rep.spec)))
        neg = int(np.sum(numeric_spectrum(realize(spec)) < 0))
        assert rep.morse_index == morse_index(spec) == neg


@pytest.mark.parametrize("n", [5, 6, 8])
def test_characteristic_polynomial_factorization(n):
    # evaluate det(H - x I) against the factorized product at random x
    rng = np.random.default_rng(n)
    for spec in enumerate_isolated(n):
        if not spec.kind.is_morse or spec.kind.value == "RegularStar":
            continue
        rot = canonical_rotation(spec)
        H = hessian(realize(rot))
        p = np.sin(rot.pattern[-1] * rot.theta)
        c = max(spec.f, spec.b)
        o = n - c
        for x in rng.uniform(-3, 3, size=3):
            lhs = np.linalg.det(H - x * np.eye(n - 1))
            rhs = (x * x + (n - 1) * p * x + (o - c) * p * p) * (x - p) ** (o - 1) * (x + p) ** (c - 2)
            assert lhs == pytest.approx((-1) ** (n - 1) * rhs, rel=1e-9, abs=1e-9)


def test_regular_star_spectrum():
    spec = enumerate_isolated(7)[0]
    rep = closed_form_spectrum(spec)
    p = rep.p
    assert rep.eigenvalues == ((-7 * p, 1), (-p, 5))
    assert rep.morse_index == 6


@given(st.integers(3, 12), st.data())
def test_mirror_index_complement(n, data):
    specs = [s for s in enumerate_isolated(n) if s.kind.is_morse]
    s = data.draw(st.sampled_from(specs))
    mirror = next(t for t in specs if t.pattern == tuple(-e for e in s.pattern) and t.omega == -s.omega)
    assert morse_index(s) + morse_index(mirror) == n - 1


def test_degenerate_index_values():
    assert [degenerate_index(n) for n in (3, 5, 7, 9)] == [-2, 6, -20, 70]
    with pytest.raises(ValueError):
        degenerate_index(6)


def test_index_identity_up_to_101():
    for n in range(3, 102, 2):
        m = (n - 1) // 2
        direct = -2 * sum((-1) ** b * comb(n, b) * (m - b) for b in range(m))
        assert alternating_index_sum(n) == direct == 2 * (-1) ** m * comb(n - 2, m - 1)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_poincare_hopf(n):
    assert poincare_hopf_ledger(n).total == 0


def test_n7_ledger_sequence():
    assert ledger_sequence(poincare_hopf_ledger(7)) == [3, -14, 21, -20, 21, -14, 3]


def test_spectra_match_shape_and_tol():
    assert spectra_match([1.0, 2.0], [2.0, 1.0 + 1e-12])
    assert not spectra_match([1.0, 2.0], [1.0])
    assert not spectra_match([1.0], [1.1])
