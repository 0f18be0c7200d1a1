import math
from collections import Counter
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import fsolve

from polyarea.catalog import (
    CriticalKind,
    build_catalog,
    classify,
    complete_fold,
    count_by_b,
    critical_value,
    degenerate_star,
    enumerate_isolated,
    enumerate_train_branches,
    half_dim,
    realize,
    train_point,
)
from polyarea.polygon import Configuration, gradient, signed_area


def test_n7_counts_and_total():
    specs = enumerate_isolated(7)
    counts = Counter(s.b for s in specs if s.kind.is_morse)
    assert dict(counts) == {0: 3, 1: 14, 2: 21, 5: 21, 6: 14, 7: 3}
    assert sum(1 for s in specs if s.kind is CriticalKind.DEGENERATE_STAR) == 1
    assert len(specs) == 77


@pytest.mark.parametrize("n", range(3, 13))
def test_counts_follow_binomial_rule(n):
    m = half_dim(n)
    counts = Counter(s.b for s in enumerate_isolated(n) if s.kind.is_morse)
    for b in range(n + 1):
        if 2 * b == n:
            with pytest.raises(ValueError):
                count_by_b(n, b)
            continue
        expected = comb(n, b) * (m - min(b, n - b))
        assert count_by_b(n, b) == expected == counts.get(b, 0)


@pytest.mark.parametrize("n", range(3, 10))
def test_realized_points_are_critical_and_classify_back(n):
    for spec in enumerate_isolated(n):
        cfg = realize(spec)
        assert np.max(np.abs(gradient(cfg))) < 1e-12
        got = classify(cfg)
        assert got is not None and got.key() == spec.key()
        assert signed_area(cfg) == pytest.approx(critical_value(spec), abs=1e-12)


def test_star_values_and_kinds():
    specs = [s for s in enumerate_isolated(5) if s.kind.is_morse]
    maxima = [s for s in specs if s.b == 0]
    assert [s.omega for s in maxima] == [1, 2]
    assert all(s.kind is CriticalKind.REGULAR_STAR for s in maxima)
    minima = [s for s in specs if s.b == 5]
    assert [s.omega for s in minima] == [-1, -2]
    assert critical_value(maxima[0]) == pytest.approx(5 * math.sin(2 * math.pi / 5))
    assert critical_value(minima[0]) == pytest.approx(-5 * math.sin(2 * math.pi / 5))


def test_degenerate_star_and_fold():
    d = degenerate_star(5)
    assert not d.kind.is_morse
    assert np.allclose(gradient(realize(d)), 0.0)
    assert critical_value(d) == 0.0
    f = complete_fold(6)
    assert np.allclose(gradient(realize(f)), 0.0)
    with pytest.raises(ValueError):
        complete_fold(5)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_train_branches(n):
    branches = enumerate_train_branches(n)
    assert len(branches) == comb(n, n // 2)
    assert all(sum(p) == 0 for p in branches)
    for pattern in branches[:5]:
        for theta in (0.3, 1.1, 2.5):
            spec = train_point(pattern, theta)
            cfg = realize(spec)
            assert np.max(np.abs(gradient(cfg))) < 1e-12
            assert signed_area(cfg) == pytest.approx(0.0, abs=1e-12)
            got = classify(cfg)
            assert got.kind is CriticalKind.ZIGZAG_TRAIN and got.pattern == spec.pattern


def test_classify_non_critical():
    assert classify(Configuration(4, [0.1, 0.5, 0.2])) is None
    assert classify(Configuration(3, [0.3, 0.1])) is None


def test_realize_rejects_inconsistent_theta():
    spec = enumerate_isolated(5)[0]
    with pytest.raises(ValueError):
        realize(spec, theta_override=spec.theta + 0.1)


def test_n3_against_brute_force_root_finding():
    # oracle: scipy root finding from a grid of starts, independent of the catalog
    def g(x):
        return np.cos(x) - np.cos(-x.sum())

    roots = []
    grid = np.linspace(-math.pi, math.pi, 25, endpoint=False) + 0.05
    for a in grid:
        for b in grid:
            x, info, ier, _ = fsolve(g, [a, b], full_output=True, xtol=1e-14)
            if ier == 1 and np.max(np.abs(g(x))) < 1e-10:
                x = np.remainder(x + math.pi, 2 * math.pi) - math.pi
                if not any(np.max(np.abs(np.remainder(x - r + math.pi, 2 * math.pi) - math.pi)) < 1e-6 for r in roots):
                    roots.append(x)
    predicted = [np.array(realize(s).alphas) for s in enumerate_isolated(3)]
    assert len(roots) == len(predicted) == 3
    for p in predicted:
        assert any(np.max(np.abs(np.remainder(p - r + math.pi, 2 * math.pi) - math.pi)) < 1e-8 for r in roots)


@given(st.integers(3, 12), st.data())
def test_mirror_symmetry(n, data):
    specs = [s for s in enumerate_isolated(n) if s.kind.is_morse]
    s = data.draw(st.sampled_from(specs))
    mirrored = [t for t in specs if t.pattern == tuple(-e for e in s.pattern) and t.omega == -s.omega]
    assert len(mirrored) == 1
    assert critical_value(mirrored[0]) == pytest.approx(-critical_value(s), abs=1e-12)


def test_build_catalog_entries():
    entries = build_catalog(7)
    assert len(entries) == 77
    deg = [e for e in entries if e.spec.kind is CriticalKind.DEGENERATE_STAR]
    assert len(deg) == 1 and deg[0].morse_index is None
