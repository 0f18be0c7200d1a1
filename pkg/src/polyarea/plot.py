"""Critical values drawn on the curves y = (n - 2b) sin x."""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from polyarea.catalog import half_dim


def marked_points(n: int) -> list[tuple[int, int, float, float]]:
    """(b, omega, x, value) for every star with f > b and positive winding."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    m = half_dim(n)
    pts = []
    for b in range(m):
        d = n - 2 * b
        for w in range(1, m - b + 1):
            x = 2 * math.pi * w / d
            pts.append((b, w, x, d * math.sin(x)))
    return pts


def plot_values(n: int, out) -> tuple[Path, Path]:
    """Write an SVG of the critical values and a companion CSV next to it."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out)
    if out.suffix.lower() != ".svg":
        out = out.with_suffix(".svg")
    if not out.parent.exists():
        raise FileNotFoundError(f"directory {out.parent} does not exist")
    pts = marked_points(n)
    xs = np.linspace(0.0, math.pi, 400)
    fig, ax = plt.subplots(figsize=(6, 4))
    for b in range(half_dim(n)):
        ax.plot(xs, (n - 2 * b) * np.sin(xs), lw=1, label=f"{n - 2 * b} sin x")
    maxima = [(x, y) for b, _, x, y in pts if b == 0]
    saddles = [(x, y) for b, _, x, y in pts if b > 0]
    if maxima:
        ax.scatter(*zip(*maxima), marker="o", color="k", zorder=3, label="maxima")
    if saddles:
        ax.scatter(*zip(*saddles), marker="x", color="r", zorder=3, label="saddles")
    for b, w, x, y in pts:
        ax.annotate(f"b={b}, w={w}", (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_xlim(0, math.pi)
    ax.set_xlabel("|alpha|")
    ax.set_ylabel("critical value")
    ax.set_title(f"critical values, n = {n}")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out, format="svg")
    plt.close(fig)

    csv_path = out.with_suffix(".csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["b", "omega", "x", "critical_value"])
        for b, w, x, y in pts:
            writer.writerow([b, w, repr(x), repr(y)])
    return out, csv_path
