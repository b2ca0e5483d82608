"""Numerical tolerances shared by every predicate in the package."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Tolerances:
    """Tolerance record threaded through all predicates.

    Attributes
    ----------
    eps_norm : float
        Allowed drift of ``<p, p>`` from -1 for points on the hyperboloid.
    eps_side : float
        Deadband for side-of-geodesic and collinearity tests.
    eps_sep : float
        Minimum separation below which two points count as coincident.
    eps_id : float
        Tolerance for identities between derived quantities (equal
        distances, concyclicity, boundary cusp gaps).
    eps_boundary : float
        Poincare-disk points with ``|u| >= 1 - eps_boundary`` are ideal.
    eps_class : float
        Relative threshold on the causal character of the bisector
        intersection direction (circle / horocycle / hypercycle).
    """

    eps_norm: float = 1e-10
    eps_side: float = 1e-9
    eps_sep: float = 1e-12
    eps_id: float = 1e-7
    eps_boundary: float = 1e-9
    eps_class: float = 1e-9

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Tolerances":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown tolerance fields: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in data.items()})

    @classmethod
    def load(cls, path: str | Path) -> "Tolerances":
        return cls.from_dict(json.loads(Path(path).read_text()))


DEFAULT = Tolerances()
