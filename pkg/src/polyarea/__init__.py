"""Critical configurations of the signed area of polygons inscribed in a circle.

Exact and numerical tools for enumerating critical polygons, their Hessian
spectra and Morse indices, the gradient index at the degenerate star (both by
Poincare-Hopf counting and by the Eisenbud-Levine-Khimshiashvili signature),
and the combinatorial identities behind the latter.
"""

from polyarea.polygon import (
    Configuration,
    gradient,
    hessian,
    normalize_angle,
    signed_area,
    transfer_to_ellipse,
)
from polyarea.catalog import (
    CriticalKind,
    CriticalSpec,
    classify,
    count_by_b,
    critical_value,
    enumerate_isolated,
    enumerate_train_branches,
    realize,
)

__all__ = [
    "Configuration",
    "CriticalKind",
    "CriticalSpec",
    "classify",
    "count_by_b",
    "critical_value",
    "enumerate_isolated",
    "enumerate_train_branches",
    "gradient",
    "hessian",
    "normalize_angle",
    "realize",
    "signed_area",
    "transfer_to_ellipse",
]

__version__ = "0.1.0"
