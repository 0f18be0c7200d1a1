"""Machine-readable reports: JSON documents with verdicts, CSV catalogs."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from polyarea.catalog import CatalogEntry

CATALOG_COLUMNS = ["n", "class", "pattern", "omega", "f", "b", "theta", "morse_index", "critical_value"]


@dataclass
class Verdict:
    name: str
    passed: bool
    details: str = ""


@dataclass
class ReportDocument:
    command: str
    parameters: dict = field(default_factory=dict)
    results: Any = None
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def check(self, name: str, passed: bool, details: str = "") -> bool:
        self.verdicts.append(Verdict(name, bool(passed), details))
        return bool(passed)

    def to_json(self, indent: int | None = 2) -> str:
        doc = {
            "command": self.command,
            "parameters": jsonable(self.parameters),
            "results": jsonable(self.results),
            "verdicts": [asdict(v) for v in self.verdicts],
        }
        return json.dumps(doc, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        d = json.loads(text)
        return cls(d["command"], d["parameters"], d["results"], [Verdict(**v) for v in d["verdicts"]])


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj: Any) -> Any:
    """JSON-native copy of ``obj``; Fractions become "num/den" strings."""
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.generic):
        return jsonable(obj.item())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):  # enums
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def catalog_rows(entries: Iterable[CatalogEntry]) -> list[dict]:
    rows = []
    for e in entries:
        s = e.spec
        rows.append({
            "n": s.n,
            "class": s.kind.value,
            "pattern": s.pattern_str,
            "omega": s.omega,
            "f": s.f,
            "b": s.b,
            "theta": repr(s.theta),
            "morse_index": "" if e.morse_index is None else e.morse_index,
            "critical_value": repr(e.critical_value),
        })
    return rows


def catalog_csv(entries: Iterable[CatalogEntry]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CATALOG_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(catalog_rows(entries))
    return buf.getvalue()
