"""Signed area of an inscribed polygon on the reduced configuration space.

A polygon with vertices P_1, ..., P_n on the unit circle is described by the
central angles alpha_i = angle(P_i, O, P_{i+1}).  With P_1 pinned the first
n-1 angles are free coordinates on the torus (S^1)^(n-1); the closing angle
alpha_n is determined by them modulo 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

TWO_PI = 2.0 * math.pi


def normalize_angle(x: float) -> float:
    """Return the representative of ``x`` modulo 2*pi in (-pi, pi]."""
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    r = math.remainder(x, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


@dataclass(frozen=True)
class Configuration:
    """A point of the reduced configuration space.

    ``alphas`` holds the n-1 free central angles, normalized to (-pi, pi].
    """

    n: int
    alphas: tuple[float, ...]

    def __init__(self, n: int, alphas: Sequence[float]):
        if n < 3:
            raise ValueError(f"need at least 3 vertices, got n={n}")
        if len(alphas) != n - 1:
            raise ValueError(f"expected {n - 1} angles for n={n}, got {len(alphas)}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "alphas", tuple(normalize_angle(float(a)) for a in alphas))

    @property
    def closing_angle(self) -> float:
        return normalize_angle(-math.fsum(self.alphas))

    @property
    def angles(self) -> np.ndarray:
        """All n central angles, the closing angle last."""
        return np.array(self.alphas + (self.closing_angle,))

    def flipped(self) -> "Configuration":
        return Configuration(self.n, [-a for a in self.alphas])


def signed_area(cfg: Configuration) -> float:
    """Sum of sin(alpha_i) over all n edges (twice the geometric signed area)."""
    return math.fsum(math.sin(a) for a in cfg.angles)


def gradient(cfg: Configuration) -> np.ndarray:
    """Partial derivatives cos(alpha_i) - cos(alpha_n), i = 1..n-1."""
    return np.cos(np.asarray(cfg.alphas)) - math.cos(cfg.closing_angle)


def hessian(cfg: Configuration) -> np.ndarray:
    """Second derivatives: -sin(alpha_n) off the diagonal, -sin(alpha_i) - sin(alpha_n) on it."""
    p = math.sin(cfg.closing_angle)
    k = cfg.n - 1
    h = np.full((k, k), -p)
    h[np.diag_indices(k)] -= np.sin(np.asarray(cfg.alphas))
    return h


def vertex_angles(cfg: Configuration) -> np.ndarray:
    """Polar angles of P_1..P_n with P_1 at angle 0."""
    return np.concatenate(([0.0], np.cumsum(cfg.alphas)))


def transfer_to_ellipse(cfg: Configuration, a: float, b: float) -> np.ndarray:
    """Vertices of the affine image of ``cfg`` on the ellipse with semi-axes a, b.

    The map (x, y) -> (a x, b y) scales every area by a*b, so critical
    polygons on the circle go to critical polygons on the ellipse.  Returns an
    (n, 2) array.
    """
    if not (a > 0 and b > 0):
        raise ValueError(f"semi-axes must be positive, got a={a}, b={b}")
    phi = vertex_angles(cfg)
    return np.column_stack((a * np.cos(phi), b * np.sin(phi)))
