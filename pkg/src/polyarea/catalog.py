"""Symbolic catalog of critical polygons.

A configuration is critical iff every |alpha_i| equals a common value theta.
The sign pattern (+1 for a forward edge, -1 for a backward edge) together with
the winding number omega pins theta down whenever the numbers f and b of
forward and backward edges differ; f == b (n even) gives one-parameter
families, the zigzag trains.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence

import numpy as np

from polyarea.polygon import Configuration, gradient

TWO_PI = 2.0 * math.pi


class CriticalKind(str, enum.Enum):
    REGULAR_STAR = "RegularStar"
    ZIGZAG_STAR = "ZigzagStar"
    ZIGZAG_TRAIN = "ZigzagTrain"
    DEGENERATE_STAR = "DegenerateStar"
    COMPLETE_FOLD = "CompleteFold"

    @property
    def is_morse(self) -> bool:
        return self in (CriticalKind.REGULAR_STAR, CriticalKind.ZIGZAG_STAR)


def half_dim(n: int) -> int:
    """m = floor((n - 1) / 2)."""
    return (n - 1) // 2


@dataclass(frozen=True)
class CriticalSpec:
    """Symbolic critical configuration.

    ``pattern`` has length n (closing edge last).  ``omega`` carries the sign
    of f - b: minima and the mirrored zigzag stars have negative winding.
    For trains ``theta`` is the chosen point on the branch.
    """

    n: int
    kind: CriticalKind
    pattern: tuple[int, ...]
    omega: int
    theta: float

    @property
    def f(self) -> int:
        return sum(1 for s in self.pattern if s > 0)

    @property
    def b(self) -> int:
        return self.n - self.f

    @property
    def m(self) -> int:
        return half_dim(self.n)

    @property
    def pattern_str(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.pattern)

    def key(self) -> tuple:
        return (self.n, self.kind.value, self.pattern, self.omega)


@dataclass(frozen=True)
class CatalogEntry:
    spec: CriticalSpec
    morse_index: Optional[int]
    critical_value: float
    multiplicity_note: str = ""


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")


def _patterns_with_backward(n: int, b: int) -> Iterator[tuple[int, ...]]:
    for back in itertools.combinations(range(n), b):
        s = [1] * n
        for i in back:
            s[i] = -1
        yield tuple(s)


def degenerate_star(n: int) -> CriticalSpec:
    return CriticalSpec(n, CriticalKind.DEGENERATE_STAR, (1,) * n, 0, 0.0)


def complete_fold(n: int) -> CriticalSpec:
    if n % 2:
        raise ValueError("a complete fold needs an even number of vertices")
    return CriticalSpec(n, CriticalKind.COMPLETE_FOLD, (1,) * n, n // 2, math.pi)


def star_theta(omega: int, f: int, b: int) -> float:
    return TWO_PI * abs(omega) / abs(f - b)


def enumerate_isolated(n: int) -> list[CriticalSpec]:
    """All isolated critical points on the reduced torus.

    Ordered by the number of backward edges; the degenerate star (n odd only)
    sits between the f > b and f < b halves.
    """
    _check_n(n)
    m = half_dim(n)
    out: list[CriticalSpec] = []
    for b in range(n + 1):
        f = n - b
        if f == b:
            continue
        if n % 2 and b == m + 1:
            out.append(degenerate_star(n))
        minority = min(f, b)
        sign = 1 if f > b else -1
        kind = CriticalKind.REGULAR_STAR if minority == 0 else CriticalKind.ZIGZAG_STAR
        for pattern in _patterns_with_backward(n, b):
            for w in range(1, m - minority + 1):
                out.append(CriticalSpec(n, kind, pattern, sign * w, star_theta(w, f, b)))
    return out


def count_by_b(n: int, b: int) -> int:
    """Number of isolated critical points with b backward edges."""
    _check_n(n)
    if not 0 <= b <= n:
        raise ValueError(f"b must lie in [0, {n}], got {b}")
    f = n - b
    if f == b:
        raise ValueError("f == b is the non-isolated (zigzag train) regime")
    m = half_dim(n)
    if f > b:
        return comb(n, b) * (m - b)
    return comb(n, f) * (m - f)


def critical_value(spec: CriticalSpec) -> float:
    """Value of the signed area at ``spec``: (n-2b) sin(2 pi omega / (n-2b)) for stars."""
    if not spec.kind.is_morse:
        return 0.0
    d = spec.n - 2 * spec.b
    return d * math.sin(TWO_PI * spec.omega / d)


def enumerate_train_branches(n: int) -> list[tuple[int, ...]]:
    """Sign patterns with f == b; each spans a branch theta in (0, pi)."""
    if n % 2 or n < 4:
        raise ValueError(f"zigzag trains need even n >= 4, got {n}")
    return list(_patterns_with_backward(n, n // 2))


def train_point(pattern: Sequence[int], theta: float) -> CriticalSpec:
    pattern = tuple(int(s) for s in pattern)
    n = len(pattern)
    if sum(pattern) != 0:
        raise ValueError("a train pattern needs as many forward as backward edges")
    if not 0.0 < theta < math.pi:
        raise ValueError(f"train parameter must lie in (0, pi), got {theta}")
    return CriticalSpec(n, CriticalKind.ZIGZAG_TRAIN, pattern, 0, float(theta))


def realize(spec: CriticalSpec, theta_override: Optional[float] = None) -> Configuration:
    """Concrete configuration alpha_i = eps_i * theta, i = 1..n-1."""
    theta = spec.theta if theta_override is None else float(theta_override)
    if len(spec.pattern) != spec.n:
        raise ValueError("pattern length must equal n")
    if spec.kind is CriticalKind.ZIGZAG_TRAIN:
        if spec.f != spec.b:
            raise ValueError("train spec with f != b")
        if not 0.0 < theta < math.pi:
            raise ValueError("trains need theta in (0, pi)")
    elif spec.kind is CriticalKind.DEGENERATE_STAR:
        if theta != 0.0:
            raise ValueError("degenerate star has theta = 0")
    elif spec.kind is CriticalKind.COMPLETE_FOLD:
        if spec.n % 2 or theta != math.pi:
            raise ValueError("complete fold needs even n and theta = pi")
    else:
        f, b = spec.f, spec.b
        if f == b:
            raise ValueError("stars need f != b")
        if spec.omega == 0 or (spec.omega > 0) != (f > b):
            raise ValueError(f"omega={spec.omega} inconsistent with f={f}, b={b}")
        if (spec.kind is CriticalKind.REGULAR_STAR) != (min(f, b) == 0):
            raise ValueError("regular stars have all edges in one direction")
        expected = star_theta(spec.omega, f, b)
        if abs(theta - expected) > 1e-12 or not 0.0 < theta < math.pi:
            raise ValueError(f"theta={theta} does not match 2 pi |omega| / |f-b| = {expected}")
    return Configuration(spec.n, [s * theta for s in spec.pattern[:-1]])


def classify(cfg: Configuration, tol: float = 1e-9) -> Optional[CriticalSpec]:
    """Recognize a critical configuration; ``None`` if it is not critical.

    Criticality is judged on the gradient sup-norm.  Because cos is flat at 0
    and pi, angles within sqrt(tol) of those values are read as the degenerate
    star or the complete fold.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if np.max(np.abs(gradient(cfg))) > tol:
        return None
    n = cfg.n
    angles = cfg.angles
    abs_angles = np.abs(angles)
    theta = float(np.mean(abs_angles))
    angle_tol = 4.0 * math.sqrt(tol)
    if np.max(abs_angles) <= angle_tol:
        return degenerate_star(n)
    if np.min(abs_angles) >= math.pi - angle_tol and n % 2 == 0:
        return complete_fold(n)
    pattern = tuple(1 if a > 0 else -1 for a in angles)
    f = sum(1 for s in pattern if s > 0)
    b = n - f
    if f == b:
        return CriticalSpec(n, CriticalKind.ZIGZAG_TRAIN, pattern, 0, theta)
    omega = round((f - b) * theta / TWO_PI)
    kind = CriticalKind.REGULAR_STAR if min(f, b) == 0 else CriticalKind.ZIGZAG_STAR
    return CriticalSpec(n, kind, pattern, omega, theta)


def build_catalog(n: int) -> list[CatalogEntry]:
    """Isolated critical points of ``n`` with Morse indices and critical values."""
    from polyarea.morse import morse_index

    entries = []
    for spec in enumerate_isolated(n):
        if spec.kind.is_morse:
            note = f"{count_by_b(n, spec.b)} points with b={spec.b}"
            entries.append(CatalogEntry(spec, morse_index(spec), critical_value(spec), note))
        else:
            entries.append(CatalogEntry(spec, None, 0.0, "isolated degenerate critical point"))
    return entries
