"""Density, quadrilateral defects and the executable four-vertex identities.

Each term of the central identity

    2 den(P) - 2 den(E(P)) = N + (1/pi) sum(delta_i)

comes from its own code path: polygon left angles, evolute left angles,
the inside/outside curvature graph, and the defect quadrilaterals.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import geom
from .curvature import CurvatureGraph, build_graph
from .errors import DegenerateError, GeometryError
from .evolute import Evolute, build_evolute
from .polygon import HPolygon, is_convex

TWO_PI = 2.0 * math.pi


class Source(enum.Enum):
    POLYGON = "polygon"
    EVOLUTE = "evolute"


@dataclass(frozen=True)
class DensityValue:
    value: float
    source: Source


def density(curve: HPolygon | Evolute) -> DensityValue:
    """``(1 / 2 pi) * sum(pi - angle)`` over the curve's own left angles."""
    source = Source.EVOLUTE if isinstance(curve, Evolute) else Source.POLYGON
    return DensityValue(sum(math.pi - a for a in curve.left_angles) / TWO_PI, source)


def _require_convex(P: HPolygon, what: str):
    if not is_convex(P):
        raise GeometryError(f"{what} is only defined here for convex polygons")


def triangle_defect(a, b, c, tol=geom.DEFAULT) -> float:
    return math.pi - (geom.vertex_angle(c, a, b, tol) + geom.vertex_angle(a, b, c, tol)
                      + geom.vertex_angle(b, c, a, tol))


def polygon_area(P: HPolygon) -> float:
    """Area of a convex polygon as the summed defects of a fan from vertex 0."""
    _require_convex(P, "fan-triangulated area")
    v0 = P[0]
    return sum(triangle_defect(v0, P[i], P[i + 1], P.tol) for i in range(1, P.n - 1))


@dataclass(frozen=True)
class DefectRecord:
    index: int
    delta: float
    alpha: float
    quad_area: float
    right_angles: tuple[float, float]


def quadrilateral_defect(P: HPolygon, E: Evolute, i: int) -> DefectRecord:
    """Defect of the quadrilateral ``M_{i-1}, V_i, M_i, O_i``.

    ``M_{i-1}`` and ``M_i`` are the midpoints of the edges at ``V_i``;
    ``alpha`` is the quadrilateral's angle at ``O_i``.  The area is computed
    independently from vertex coordinates, split along the diagonal
    ``V_i O_i``.
    """
    _require_convex(P, "quadrilateral defect")
    tol = P.tol
    i %= P.n
    V, O = P[i], E.centers[i]
    m_prev = geom.midpoint(P[i - 1], V, tol)
    m_next = geom.midpoint(V, P[i + 1], tol)
    for name, pt in (("midpoint", m_prev), ("midpoint", m_next), ("vertex", V)):
        if geom.hdist(O, pt, tol) <= tol.eps_sep:
            raise DegenerateError(f"circumcenter {i} coincides with a {name}")
    alpha = geom.vertex_angle(m_prev, O, m_next, tol)
    delta = math.pi - P.left_angles[i] - alpha
    area = geom.triangle_area(V, m_prev, O) + geom.triangle_area(V, m_next, O)
    rights = (geom.vertex_angle(V, m_prev, O, tol), geom.vertex_angle(V, m_next, O, tol))
    return DefectRecord(i, delta, alpha, area, rights)


def defects(P: HPolygon, E: Evolute | None = None) -> list[DefectRecord]:
    E = E or build_evolute(P)
    return [quadrilateral_defect(P, E, i) for i in range(P.n)]


@dataclass(frozen=True)
class Theorem5Terms:
    den_polygon: float
    den_evolute: float
    N: int
    defect_sum: float
    alpha_sum: float

    @property
    def residual(self) -> float:
        lhs = 2.0 * self.den_polygon - 2.0 * self.den_evolute
        return abs(lhs - self.N - self.defect_sum / math.pi)

    @property
    def rearranged_residual(self) -> float:
        """``|(1/pi) sum(alpha) - 2 den(E) - N|``."""
        return abs(self.alpha_sum / math.pi - 2.0 * self.den_evolute - self.N)


def theorem5_terms(P: HPolygon, E: Evolute | None = None,
                   graph: CurvatureGraph | None = None) -> Theorem5Terms:
    _require_convex(P, "the density identity")
    if P.n < 4:
        raise GeometryError("the density identity is checked for n >= 4")
    E = E or build_evolute(P)
    graph = graph or build_graph(P)
    recs = defects(P, E)
    return Theorem5Terms(
        den_polygon=density(P).value,
        den_evolute=density(E).value,
        N=graph.N,
        defect_sum=sum(r.delta for r in recs),
        alpha_sum=sum(r.alpha for r in recs),
    )


def theorem5_residual(P: HPolygon, E: Evolute | None = None, graph: CurvatureGraph | None = None) -> float:
    return theorem5_terms(P, E, graph).residual


def theorem4_check(P: HPolygon, E: Evolute | None = None) -> bool:
    """The evolute's density is at most -1."""
    E = E or build_evolute(P)
    return density(E).value <= -1.0 + P.tol.eps_id


@dataclass(frozen=True)
class Theorem6Result:
    N: int
    passed: bool


def theorem6_check(P: HPolygon, graph: CurvatureGraph | None = None) -> Theorem6Result:
    """At least four extremal vertices, and an even number of them."""
    _require_convex(P, "the four-vertex count")
    if P.n < 4:
        raise GeometryError("the four-vertex theorem needs n >= 4")
    graph = graph or build_graph(P)
    return Theorem6Result(graph.N, graph.N >= 4 and graph.N % 2 == 0)
