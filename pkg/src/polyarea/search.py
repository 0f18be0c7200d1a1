"""Brute-force oracle: multi-start Newton for zeros of the gradient on the torus.

Independent of the catalog except for the final classification step.  All
starts are refined together as one batch; a single start goes through the same
code path.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from polyarea.catalog import CriticalKind, CriticalSpec, classify, enumerate_isolated, realize
from polyarea.polygon import Configuration

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SearchConfig:
    n: int
    starts: int = 1000
    seed: int = 0
    newton_tol: float = 1e-12
    max_iters: int = 100
    cluster_radius: float = 1e-6
    polish: int = 8

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if self.starts < 1:
            raise ValueError("need at least one start")
        if not (self.newton_tol > 0 and self.cluster_radius > 0):
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class FoundPoint:
    configuration: Configuration
    gradient_norm: float
    classification: Optional[CriticalSpec]
    hits: int = 1

    @property
    def is_train_point(self) -> bool:
        """On the closure of a zigzag-train branch (n even)."""
        c = self.classification
        if c is None or self.configuration.n % 2:
            return False
        return c.kind in (CriticalKind.ZIGZAG_TRAIN, CriticalKind.DEGENERATE_STAR, CriticalKind.COMPLETE_FOLD)


def wrap(x: np.ndarray) -> np.ndarray:
    """Map angles into (-pi, pi]."""
    r = np.remainder(x + math.pi, TWO_PI) - math.pi
    return np.where(r <= -math.pi, r + TWO_PI, r)


def torus_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Max over coordinates of the circular distance (broadcasts over leading axes)."""
    d = np.abs(wrap(np.asarray(a) - np.asarray(b)))
    return d.max(axis=-1)


def _grad(X: np.ndarray) -> np.ndarray:
    an = -X.sum(axis=1, keepdims=True)
    return np.cos(X) - np.cos(an)


def _hess(X: np.ndarray) -> np.ndarray:
    S, N = X.shape
    p = np.sin(-X.sum(axis=1))
    H = np.broadcast_to(-p[:, None, None], (S, N, N)).copy()
    idx = np.arange(N)
    H[:, idx, idx] -= np.sin(X)
    return H


def _merit(G: np.ndarray) -> np.ndarray:
    return 0.5 * np.einsum("ij,ij->i", G, G)


def refine_batch(X0: np.ndarray, tol: float, max_iters: int, polish: int = 0) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Damped Newton on grad = 0 for every row of ``X0``.

    The step solves H d = -g in the least-squares sense (pseudo-inverse), which
    stays defined where H is singular, e.g. along train branches.  Steps are
    halved until the merit |g|^2 / 2 decreases; if none decreases, a
    backtracked step along -H g (the merit gradient) is taken instead.
    Returns (points, sup-norm of gradient, converged mask).
    """
    X = wrap(np.array(X0, dtype=float, copy=True))
    G = _grad(X)
    gnorm = np.abs(G).max(axis=1)
    done = gnorm <= tol
    extra = np.zeros(len(X), dtype=int)
    for _ in range(max_iters + polish):
        active = ~done | (extra < polish)
        if not active.any():
            break
        idx = np.flatnonzero(active)
        was_done = done[idx]
        Xa, Ga = X[idx], G[idx]
        Ha = _hess(Xa)
        D = -np.einsum("sij,sj->si", np.linalg.pinv(Ha, rcond=1e-13), Ga)
        f0 = _merit(Ga)
        newX, newG = Xa.copy(), Ga.copy()
        pending = np.ones(len(idx), dtype=bool)
        t = 1.0
        for _ in range(30):
            cand = wrap(Xa[pending] + t * D[pending])
            cg = _grad(cand)
            ok = _merit(cg) < f0[pending]
            sel = np.flatnonzero(pending)[ok]
            newX[sel], newG[sel] = cand[ok], cg[ok]
            pending[sel] = False
            if not pending.any():
                break
            t *= 0.5
        # steepest descent on the merit for rows where no Newton step helped
        sd = np.flatnonzero(pending & ~was_done)
        if len(sd):
            Dg = -np.einsum("sij,sj->si", Ha[sd], Ga[sd])
            t = np.ones(len(sd))
            for _ in range(40):
                cand = wrap(Xa[sd] + t[:, None] * Dg)
                cg = _grad(cand)
                ok = _merit(cg) < f0[sd]
                newX[sd[ok]], newG[sd[ok]] = cand[ok], cg[ok]
                sd, Dg, t = sd[~ok], Dg[~ok], t[~ok] * 0.5
                if not len(sd):
                    break
        new_norm = np.abs(newG).max(axis=1)
        # polishing must not leave the tolerance
        keep = ~(was_done & (new_norm > tol))
        X[idx[keep]], G[idx[keep]] = newX[keep], newG[keep]
        gnorm[idx[keep]] = new_norm[keep]
        extra[idx[was_done]] += 1
        done |= gnorm <= tol
    return X, gnorm, done


def newton_refine(cfg: Configuration, sc: SearchConfig) -> Optional[FoundPoint]:
    """Refine one start; ``None`` if it has not converged after ``max_iters``."""
    X, gnorm, done = refine_batch(np.array([cfg.alphas]), sc.newton_tol, sc.max_iters, sc.polish)
    if not done[0]:
        return None
    found = Configuration(cfg.n, X[0])
    return FoundPoint(found, float(gnorm[0]), classify(found, _classify_tol(sc)))


def _classify_tol(sc: SearchConfig) -> float:
    return max(1e-9, 10 * sc.newton_tol)


def random_starts(sc: SearchConfig) -> np.ndarray:
    """Uniform starts on (-pi, pi]^(n-1) from a counter-based Philox stream keyed by the seed."""
    rng = np.random.Generator(np.random.Philox(key=sc.seed))
    return wrap(rng.uniform(-math.pi, math.pi, size=(sc.starts, sc.n - 1)))


def cluster(points: np.ndarray, radius: float) -> list[tuple[int, int]]:
    """Greedy clustering by torus distance; returns (representative row, size) pairs."""
    if not len(points):
        return []
    grid = np.round(points / (radius / 8.0)).astype(np.int64)
    _, first, counts = np.unique(grid, axis=0, return_index=True, return_counts=True)
    order = np.argsort(first)
    reps: list[int] = []
    sizes: list[int] = []
    rep_arr = np.empty((0, points.shape[1]))
    for u in order:
        i = first[u]
        if len(reps):
            d = torus_distance(rep_arr, points[i])
            j = int(np.argmin(d))
            if d[j] < radius:
                sizes[j] += int(counts[u])
                continue
        reps.append(int(i))
        sizes.append(int(counts[u]))
        rep_arr = np.vstack([rep_arr, points[i]])
    return list(zip(reps, sizes))


def multistart_search(sc: SearchConfig, chunk: int = 20000, workers: int = 1) -> list[FoundPoint]:
    """Converged, clustered and classified zeros of the gradient from ``sc.starts`` random starts.

    Starts are refined in chunks; with ``workers > 1`` chunks run on a thread
    pool.  Results do not depend on ``workers``.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    X0 = random_starts(sc)
    chunks = [X0[lo : lo + chunk] for lo in range(0, len(X0), chunk)]

    def run(block):
        return refine_batch(block, sc.newton_tol, sc.max_iters, sc.polish)

    if workers == 1:
        results = [run(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, chunks))
    pts, norms = [], []
    for X, gnorm, done in results:
        pts.append(X[done])
        norms.append(gnorm[done])
    P = np.concatenate(pts) if pts else np.empty((0, sc.n - 1))
    Gn = np.concatenate(norms) if norms else np.empty(0)
    out = []
    tol = _classify_tol(sc)
    for i, size in cluster(P, sc.cluster_radius):
        cfg = Configuration(sc.n, P[i])
        out.append(FoundPoint(cfg, float(Gn[i]), classify(cfg, tol), size))
    return out


@dataclass
class CatalogMatch:
    n: int
    hits: dict = field(default_factory=dict)  # spec key -> distance of nearest matching point
    misses: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)
    train_points: int = 0
    train_patterns: set = field(default_factory=set)
    matched_points: int = 0

    @property
    def predicted(self) -> int:
        return len(self.hits) + len(self.misses)

    @property
    def ok(self) -> bool:
        return not self.misses and not self.anomalies


def match_catalog(found: Sequence[FoundPoint], n: int, match_radius: float = 1e-6) -> CatalogMatch:
    """Compare found points with the analytic list of isolated critical points.

    A predicted point is hit when a found point with the same classification
    lies within ``match_radius``.  Found points that are neither a predicted
    isolated point nor (n even) on a train branch are anomalies.
    """
    predicted = {s.key(): s for s in enumerate_isolated(n)}
    report = CatalogMatch(n)
    best: dict = {}
    for fp in found:
        c = fp.classification
        if c is None:
            report.anomalies.append(fp)
            continue
        if c.key() in predicted:
            target = np.array(realize(predicted[c.key()]).alphas)
            d = float(torus_distance(np.array(fp.configuration.alphas), target))
            if d <= match_radius:
                best[c.key()] = min(d, best.get(c.key(), math.inf))
                report.matched_points += 1
                continue
        if fp.is_train_point:
            report.train_points += 1
            if c.kind is CriticalKind.ZIGZAG_TRAIN:
                report.train_patterns.add(c.pattern)
            continue
        report.anomalies.append(fp)
    for key, spec in predicted.items():
        if key in best:
            report.hits[key] = best[key]
        else:
            report.misses.append(spec)
    return report


def criterion_residual(cfg: Configuration) -> float:
    """max_i | |alpha_i| - theta | with theta the mean of the |alpha_i|."""
    a = np.abs(cfg.angles)
    return float(np.max(np.abs(a - a.mean())))
