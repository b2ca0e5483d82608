"""The discrete evolute: the closed curve through consecutive circumcenters."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geom
from .circumcircle import Circle
from .curvature import Extremal, build_graph
from .errors import ConstructionError, DegenerateError
from .geom import HPoint
from .polygon import HPolygon, is_convex


@dataclass(frozen=True)
class Evolute:
    centers: tuple[HPoint, ...]
    left_angles: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.centers)


def build_evolute(P: HPolygon) -> Evolute:
    """Circumcenters ``O_i`` in vertex order, with their left angles.

    The evolute is traversed in the polygon's order and may self-intersect.
    """
    tol = P.tol
    centers = []
    for i, c in enumerate(P.circumcircles):
        if not isinstance(c, Circle):
            raise ConstructionError(f"no circumcircle at vertex {i} ({c.value})")
        centers.append(c.center)
    n = len(centers)
    for i in range(n):
        if geom.hdist(centers[i], centers[(i + 1) % n], tol) <= tol.eps_sep:
            raise ConstructionError(f"evolute vertices {i} and {(i + 1) % n} coincide")
    try:
        angles = tuple(
            geom.left_angle(centers[i - 1], centers[i], centers[(i + 1) % n], tol) for i in range(n)
        )
    except DegenerateError as exc:
        raise ConstructionError(f"evolute angle undefined: {exc}") from exc
    return Evolute(tuple(centers), angles)


def angle_gaps(P: HPolygon, E: Evolute) -> list[float]:
    """Signed ``angle(O_i) - angle(V_i)`` per vertex."""
    return [E.left_angles[i] - P.left_angles[i] for i in range(P.n)]


def detect_cusps(P: HPolygon, E: Evolute) -> list[bool]:
    """``O_i`` is a cusp when its angle differs from ``V_i``'s by more than pi."""
    if E.n != P.n:
        raise ValueError("polygon and evolute have different vertex counts")
    cusps = []
    for i, gap in enumerate(angle_gaps(P, E)):
        if abs(abs(gap) - math.pi) < P.tol.eps_id:
            raise DegenerateError(f"angle gap at vertex {i} is pi within tolerance")
        cusps.append(abs(gap) > math.pi)
    return cusps


@dataclass(frozen=True)
class Theorem3Report:
    extremal: tuple[bool, ...]
    cusp: tuple[bool, ...]
    gaps: tuple[float, ...]
    mismatches: tuple[int, ...]
    range_violations: tuple[int, ...]  # convex only: gap outside the expected interval
    asserted: bool  # False for non-convex input (exploratory only)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.range_violations


def theorem3_check(P: HPolygon, graph=None, E: Evolute | None = None) -> Theorem3Report:
    """Compare extremal vertices with evolute cusps, index by index.

    For convex input also checks that the gap lies in ``(0, pi)`` at
    ordinary vertices and in ``(pi, 2 pi)`` at extremal ones.
    """
    graph = graph or build_graph(P)
    E = E or build_evolute(P)
    cusp = detect_cusps(P, E)
    gaps = angle_gaps(P, E)
    ext = [x is not Extremal.NONE for x in graph.extremal]
    mismatches = tuple(i for i in range(P.n) if ext[i] != cusp[i])
    convex = is_convex(P)
    bad = []
    if convex:
        for i, g in enumerate(gaps):
            lo, hi = (math.pi, 2 * math.pi) if ext[i] else (0.0, math.pi)
            if not lo < g < hi:
                bad.append(i)
    return Theorem3Report(tuple(ext), tuple(cusp), tuple(gaps), mismatches, tuple(bad), convex)
