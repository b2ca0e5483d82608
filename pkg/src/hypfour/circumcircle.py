"""Constant-curvature cycle through three points.

Points equidistant from ``A`` and ``B`` form the plane ``<x, A - B> = 0``.
Two bisector planes meet in a line with direction ``v``; its causal
character decides the cycle type:

* timelike ``v`` hits the hyperboloid: a circle centred at ``v / |v|``;
* lightlike ``v`` is an ideal point: a horocycle;
* spacelike ``v`` is the pole of a geodesic: a hypercycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from . import geom
from .config import DEFAULT, Tolerances
from .errors import DegenerateError
from .geom import HPoint


@dataclass(frozen=True)
class Circle:
    center: HPoint
    radius: float


class CycleKind(enum.Enum):
    HOROCYCLE = "horocycle"
    HYPERCYCLE = "hypercycle"
    COLLINEAR = "collinear"


Cycle = Union[Circle, CycleKind]


class Position(enum.Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


def is_collinear(A, B, C, tol: Tolerances = DEFAULT) -> bool:
    return abs(geom.scaled_det(A, B, C)) <= tol.eps_side


def circumscribe(A: HPoint, B: HPoint, C: HPoint, tol: Tolerances = DEFAULT) -> Cycle:
    """Classify the cycle through three distinct points.

    Returns a :class:`Circle` or one of the :class:`CycleKind` tags.
    Collinearity is tested first so that a shared geodesic is reported
    distinctly from a (degenerate) hypercycle.
    """
    for p, q in ((A, B), (B, C), (A, C)):
        if geom.hdist(p, q, tol) <= tol.eps_sep:
            raise DegenerateError("circumscribe needs three distinct points")
    if is_collinear(A, B, C, tol):
        return CycleKind.COLLINEAR
    n1 = (A[0] - B[0], A[1] - B[1], A[2] - B[2])
    n2 = (B[0] - C[0], B[1] - C[1], B[2] - C[2])
    v = geom.mink_cross(n1, n2)
    s = geom.mink_dot(v, v)
    scale = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    if s > tol.eps_class * scale:
        return CycleKind.HYPERCYCLE
    if s >= -tol.eps_class * scale:
        return CycleKind.HOROCYCLE
    center = geom.normalize_point(v)
    # averaging the three distances makes the radius symmetric in A, B, C
    radius = (geom.hdist(center, A, tol) + geom.hdist(center, B, tol) + geom.hdist(center, C, tol)) / 3.0
    return Circle(center, radius)


def point_vs_circle(c: Circle, x: HPoint, tol: Tolerances = DEFAULT) -> Position:
    d = geom.hdist(c.center, x, tol)
    if abs(d - c.radius) <= tol.eps_id:
        return Position.ON
    return Position.INSIDE if d < c.radius else Position.OUTSIDE


def is_coherent_at(Vprev: HPoint, V: HPoint, Vnext: HPoint, O: HPoint, tol: Tolerances = DEFAULT) -> bool:
    """Whether ``O`` lies strictly inside the cone at ``V`` spanned by its neighbours."""
    n_prev = geom.geodesic_normal(V, Vprev, tol)
    n_next = geom.geodesic_normal(V, Vnext, tol)
    s1 = geom.side_of(O, n_prev, tol)
    s2 = geom.side_of(O, n_next, tol)
    if s1 == 0 or s2 == 0:
        return False
    return s1 == geom.side_of(Vnext, n_prev, tol) and s2 == geom.side_of(Vprev, n_next, tol)


def circle_spread(center: HPoint, pts) -> float:
    d = [geom.hdist(center, p) for p in pts]
    return max(d) - min(d)
